import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# No -ffast-math: the kernels must stay strictly IEEE so that sweep output
# is reproducible bit for bit.
extensions = [
    Extension(
        "entfid._core",
        ["src/entfid/_core.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
