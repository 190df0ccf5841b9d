import pytest

from relayjam.config import ConfigError, SimulationConfig, format_config, load_config, parse_config
from relayjam.selection import SchemeId


def test_empty_document_gives_defaults():
    cfg = parse_config("")
    assert cfg == SimulationConfig()
    assert (cfg.L, cfg.beta, cfg.K, cfg.trials) == (10.0, 3.0, 8, 10000)
    assert len(cfg.power_grid) == 26 and cfg.power_grid[-1] == 50.0
    assert cfg.target_rate == 0.2
    assert cfg.allow_equal_jammers and cfg.reciprocal_channels


def test_scheme_list_and_values():
    cfg = parse_config(
        """
        # comment
        [simulation]
        schemes = OSW, OS, os-msisr
        trials = 500   # inline comment
        target_rate = none
        [powers]
        grid = 0, 5, 10
        L = 4
        """
    )
    assert cfg.schemes == (SchemeId.OSW, SchemeId.OS, SchemeId.OS_MSISR)
    assert cfg.trials == 500 and cfg.target_rate is None
    assert cfg.power_grid == (0.0, 5.0, 10.0) and cfg.L == 4.0


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("[powers]\nL = 0.5", 2, "L must be >= 1"),
        ("[powers]\n\nfoo = 1", 3, "unknown key"),
        ("[simulation]\nL = 2", 2, "belongs in [powers]"),
        ("trials = 3", 1, "before any section"),
        ("[simulation]\ntrials = 3\ntrials = 4", 3, "duplicate"),
        ("[simulation]\ntrials = many", 2, "integer"),
        ("[simulation]\nschemes = OS, XYZ", 2, "unknown scheme"),
        ("[bogus]", 1, "unknown section"),
        ("[powers]\ngrid = 0:2:10:3", 2, "start:step:stop"),
        ("[powers]\ngrid = 10, 5", 2, "increasing"),
        ("[scenario]\nname = nowhere", 2, "unknown scenario"),
        ("[scenario]\ns1 = 0, 0", 2, "only valid with name = custom"),
    ],
)
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ConfigError) as exc:
        parse_config(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line}: ")


def test_custom_scenario():
    text = """
    [scenario]
    name = custom
    s1 = 0, 1
    s2 = 1, 1
    eve = 0.5, 0
    intermediates = 0.2, 0.5; 0.8, 0.5; 0.5, 0.9
    """
    cfg = parse_config(text)
    assert cfg.K == 3
    topo = cfg.topology()
    assert topo.K == 3 and topo.eve.as_tuple() == (0.5, 0.0)
    with pytest.raises(ConfigError, match="missing intermediates"):
        parse_config("[scenario]\nname = custom\ns1 = 0,1\ns2 = 1,1\neve = 0.5,0")
    with pytest.raises(ConfigError, match="K = 2"):
        parse_config(text + "K = 2\n")
    with pytest.raises(ConfigError, match="coincident"):
        parse_config(text.replace("0.8, 0.5", "0.2, 0.5"))


@pytest.mark.parametrize(
    "cfg",
    [
        SimulationConfig(),
        parse_config("[powers]\ngrid = 0:0.1:0.3\nL = 3.3\n[simulation]\nschemes = SSW\ntarget_rate = none"),
        parse_config(
            "[scenario]\nname = custom\ns1 = 0.1, 1\ns2 = 1, 1\neve = 0.5, 0.3333333333333333\n"
            "intermediates = 0.2, 0.5\n[output]\nfigures = no\ncurves = c.csv"
        ),
        parse_config("[scenario]\nname = cluster-near-eve\ncluster_radius = 0.07\nK = 5\nplacement_seed = 9"),
    ],
)
def test_round_trip(cfg):
    assert parse_config(format_config(cfg)) == cfg


def test_load_config(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text("[simulation]\nmaster_seed = 42\n")
    assert load_config(p).master_seed == 42
