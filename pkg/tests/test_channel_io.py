import numpy as np
import pytest

from entfid.channel_io import (ChannelFormatError, read_channel_file, read_density_file,
                               write_channel_file, write_density_file)
from entfid.channels import CompletenessError, KrausChannel, apply_channel
from entfid.scenario import ScenarioPoint, scenario_channel
from entfid.states import DensityMatrix, bell_state, maximally_mixed

rng = np.random.default_rng(99)


def random_channel(dim=2, env=2):
    from entfid.channels import kraus_from_unitary_env
    from entfid.linalg import expm_i

    n = dim * env
    h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return kraus_from_unitary_env(expm_i(h + h.conj().T, 1.0), maximally_mixed(env), dim)


def test_channel_round_trip_is_exact(tmp_path):
    ch = random_channel()
    path = tmp_path / "ch.txt"
    write_channel_file(ch, path)
    back = read_channel_file(path)
    assert len(back.operators) == len(ch.operators)
    for a, b in zip(ch.operators, back.operators):
        assert np.array_equal(a, b)  # 17 significant digits round-trip exactly


def test_density_round_trip_is_exact(tmp_path):
    rho = bell_state("+")
    path = tmp_path / "rho.txt"
    write_density_file(rho, path)
    back = read_density_file(path)
    assert np.array_equal(back.matrix, rho.matrix)
    assert back.subsystem_dims == (4,)


def test_scenario_channel_round_trip_behaves_identically(tmp_path):
    ch = scenario_channel(ScenarioPoint(1.23))
    path = tmp_path / "scenario.txt"
    write_channel_file(ch, path)
    back = read_channel_file(path)
    rho = maximally_mixed(2)
    assert np.array_equal(apply_channel(back, rho).matrix,
                          apply_channel(ch, rho).matrix)


def test_file_shape(tmp_path):
    ch = random_channel()
    path = tmp_path / "ch.txt"
    write_channel_file(ch, path)
    lines = path.read_text().splitlines()
    assert lines[0] == f"dim=2 ops={len(ch.operators)}"
    assert len(lines) == 1 + 2 * len(ch.operators)
    assert all(len(line.split()) == 2 for line in lines[1:])


def write(tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    return p


def test_empty_file(tmp_path):
    p = write(tmp_path, "\n\n")
    with pytest.raises(ChannelFormatError, match="empty file") as err:
        read_channel_file(p)
    assert (err.value.line, err.value.column) == (1, 1)


def test_bad_header(tmp_path):
    p = write(tmp_path, "dim=2, ops=1\n1+0j 0+0j\n0+0j 1+0j\n")
    with pytest.raises(ChannelFormatError, match="header"):
        read_channel_file(p)


def test_zero_ops_rejected(tmp_path):
    p = write(tmp_path, "dim=2 ops=0\n")
    with pytest.raises(ChannelFormatError, match=">= 1"):
        read_channel_file(p)


def test_wrong_entry_count(tmp_path):
    p = write(tmp_path, "dim=2 ops=1\n1+0j 0+0j 0+0j\n0+0j 1+0j\n")
    with pytest.raises(ChannelFormatError, match="expected 2 entries, found 3") as err:
        read_channel_file(p)
    assert err.value.line == 2


def test_unparseable_entry_reports_position(tmp_path):
    p = write(tmp_path, "dim=2 ops=1\n1+0j 0+0j\n0+0j 1+oj\n")
    with pytest.raises(ChannelFormatError, match="cannot parse") as err:
        read_channel_file(p)
    assert err.value.line == 3
    assert err.value.column == 6
    assert "bad.txt:3:6" in str(err.value)


def test_non_finite_entry(tmp_path):
    p = write(tmp_path, "dim=2 ops=1\n1+0j 0+0j\n0+0j inf+0j\n")
    with pytest.raises(ChannelFormatError, match="non-finite"):
        read_channel_file(p)


def test_truncated_file(tmp_path):
    p = write(tmp_path, "dim=2 ops=2\n1+0j 0+0j\n0+0j 1+0j\n1+0j 0+0j\n")
    with pytest.raises(ChannelFormatError, match="unexpected end of file") as err:
        read_channel_file(p)
    assert err.value.line == 5


def test_trailing_content(tmp_path):
    p = write(tmp_path, "dim=1 ops=1\n1+0j\nleftover\n")
    with pytest.raises(ChannelFormatError, match="unexpected content"):
        read_channel_file(p)


def test_incomplete_channel_raises_completeness_error(tmp_path):
    p = write(tmp_path, "dim=2 ops=1\n0.5+0j 0+0j\n0+0j 0.5+0j\n")
    with pytest.raises(CompletenessError) as err:
        read_channel_file(p)
    assert err.value.deviation == pytest.approx(0.75)


def test_round_trip_respects_load_tolerance(tmp_path):
    # a channel that is complete to ~1e-9 still loads: the file reader is
    # deliberately looser than the constructor default
    eps = 1e-9
    ops = [np.sqrt(1 + eps) * np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex)]
    ch = KrausChannel(ops, completeness_atol=1e-5)
    path = tmp_path / "near.txt"
    write_channel_file(ch, path)
    back = read_channel_file(path)
    assert len(back.operators) == 1


def test_density_header_error(tmp_path):
    p = write(tmp_path, "n=2\n1+0j 0+0j\n0+0j 0+0j\n")
    with pytest.raises(ChannelFormatError, match="dim=<n>"):
        read_density_file(p)


def test_density_not_a_state(tmp_path):
    p = write(tmp_path, "dim=2\n1+0j 0+0j\n0+0j 1+0j\n")  # trace 2
    with pytest.raises(ChannelFormatError, match="not a valid density matrix"):
        read_density_file(p)


def test_density_trailing_content(tmp_path):
    p = write(tmp_path, "dim=1\n1+0j\n1+0j\n")
    with pytest.raises(ChannelFormatError, match="unexpected content"):
        read_density_file(p)


def test_read_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        read_channel_file(tmp_path / "does-not-exist.txt")


def test_density_subsystem_dims_survive_io(tmp_path):
    rho = DensityMatrix(np.eye(4) / 4.0, (2, 2))
    path = tmp_path / "joint.txt"
    write_density_file(rho, path)
    back = read_density_file(path)
    # the text format does not record the factorization; readers get a flat dim
    assert back.subsystem_dims == (4,)
