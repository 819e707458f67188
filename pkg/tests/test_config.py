import pytest
import yaml

from chargebasis.core import ChargeBasisFramework
from chargebasis.suites import SuiteContext, SuiteManager, checks
from chargebasis.utils import ChainConditionError, ConfigManager, ConfigurationError, RunConfig
from chargebasis.utils.config import DEFAULT_LIMITS, DEFAULT_SUITES


def write_config(root, limits=None, suites=None, env=None, name="dev"):
    (root / "environments").mkdir(parents=True, exist_ok=True)
    if limits is not None:
        (root / "limits.yaml").write_text(yaml.safe_dump(limits))
    if suites is not None:
        (root / "suites.yaml").write_text(yaml.safe_dump(suites))
    if env is not None:
        (root / "environments" / f"{name}.yaml").write_text(yaml.safe_dump(env))
    return str(root)


@pytest.mark.usefixtures("in_tmp")
class TestConfigManager:
    def test_defaults_without_directory(self):
        config = ConfigManager("missing/")
        assert config.get("limits") == DEFAULT_LIMITS
        assert config.get("suites")["seed"] == DEFAULT_SUITES["seed"]
        assert config.threads() == 1

    def test_yaml_overlays_defaults(self, in_tmp):
        path = write_config(
            in_tmp / "config",
            limits={"groebner": {"max_n": 4}},
            suites={"default_n": {"thm-a": 5}},
            env={"workers": {"threads": 2}},
        )
        config = ConfigManager(path)
        assert config.get("limits")["groebner"] == {**DEFAULT_LIMITS["groebner"], "max_n": 4}
        assert config.get("suites")["default_n"]["thm-a"] == 5
        assert config.get("suites")["default_n"]["golden"] == 10
        assert config.threads() == 2

    def test_environment_selects_file(self, in_tmp):
        path = write_config(in_tmp / "config", env={"workers": {"threads": 4}}, name="prod")
        assert ConfigManager(path, "prod").threads() == 4
        assert ConfigManager(path, "dev").threads() == 1

    def test_threads_variable_wins(self, in_tmp, monkeypatch):
        path = write_config(in_tmp / "config", env={"workers": {"threads": 2}})
        monkeypatch.setenv("CHARGEBASIS_THREADS", "6")
        assert ConfigManager(path).threads() == 6

    @pytest.mark.parametrize("raw", ["zero", "0", "-2"])
    def test_invalid_threads_variable(self, monkeypatch, raw):
        monkeypatch.setenv("CHARGEBASIS_THREADS", raw)
        with pytest.raises(ConfigurationError):
            ConfigManager("missing/").threads()

    def test_run_config_overrides(self):
        run_config = ConfigManager("missing/").run_config(n=5, suite="thm-a", seed=None, deterministic=True)
        assert run_config.n == 5
        assert run_config.seed == DEFAULT_SUITES["seed"]
        assert run_config.deterministic


class TestRunConfig:
    @pytest.mark.parametrize(
        "fields",
        [{"output_format": "xml"}, {"order": "deglex"}, {"workers": 0}, {"n": -1}, {"n": 9, "suite": "thm-a"}],
    )
    def test_validate_rejects(self, fields):
        with pytest.raises(ConfigurationError):
            RunConfig(**fields).validate(DEFAULT_LIMITS)

    def test_golden_ignores_size_limit(self):
        RunConfig(n=10, suite="golden").validate(DEFAULT_LIMITS)

    def test_groebner_limit(self):
        assert RunConfig().groebner_limit(DEFAULT_LIMITS) == 5
        assert RunConfig(groebner_n6=True).groebner_limit(DEFAULT_LIMITS) == 6
        with pytest.raises(ConfigurationError, match="--groebner-n6"):
            RunConfig().check_groebner_size(6, DEFAULT_LIMITS)
        RunConfig(groebner_n6=True).check_groebner_size(6, DEFAULT_LIMITS)

    def test_to_dict_lists(self):
        data = RunConfig(mu=(3, 1), gamma=(2, 2)).to_dict()
        assert data["mu"] == [3, 1]
        assert data["gamma"] == [2, 2]


class TestSuiteManager:
    def test_resolve(self):
        manager = SuiteManager()
        assert manager.resolve("all") == manager.available()
        assert manager.resolve("swap") == ["swap"]
        with pytest.raises(ConfigurationError):
            manager.resolve("thm-z")

    def test_bound(self):
        manager = SuiteManager()
        assert manager.bound("thm-a") == DEFAULT_SUITES["default_n"]["thm-a"]
        assert manager.bound("golden", 12) == 12
        with pytest.raises(ConfigurationError):
            manager.bound("cardinality", 9)
        with pytest.raises(ConfigurationError):
            manager.bound("prop-b", 6)

    def test_run_records_result(self):
        result = SuiteManager().run("cardinality", 4)
        assert result.passed
        assert result.checked > 0
        assert result.seconds >= 0

    def test_run_many_fits_explicit_n(self):
        manager = SuiteManager()
        assert manager._fit("prop-b", 8) == 5
        assert manager._fit("swap", 12) == 8
        assert manager._fit("golden", 12) == 12
        assert manager._fit("swap", None) is None


class TestSuiteCases:
    def test_chains_error_fails_only_its_shuffles(self, monkeypatch):
        run = checks.chains_run

        def chains_run(z, seed, validate=False):
            if tuple(z) == (0, 0):
                raise ChainConditionError(2, "row 1 is not increasing")
            return run(z, seed, validate)

        monkeypatch.setattr(checks, "chains_run", chains_run)
        result = checks.suite_sum_of_ctypes(3, SuiteContext())
        assert result.checked == 8
        assert result.failure_count == 2
        assert all(case["z"] == [0, 0] for case in result.failures)
        assert all(case["error"].startswith("ChainConditionError") for case in result.failures)

    def test_swap_error_fails_only_its_case(self, monkeypatch):
        certify = checks.swap_chains_certificate

        def swap_chains_certificate(w, i, validate=True):
            if tuple(w) == (1, 3, 2):
                raise ChainConditionError(5, "box outside nu")
            return certify(w, i, validate)

        monkeypatch.setattr(checks, "swap_chains_certificate", swap_chains_certificate)
        result = checks.suite_swap(3, SuiteContext())
        assert result.checked == 2
        assert result.failure_count == 1
        assert result.failures[0]["w"] == [1, 3, 2]


@pytest.mark.usefixtures("in_tmp")
class TestFramework:
    def test_status(self):
        framework = ChargeBasisFramework("missing/", configure_logging=False, groebner_n6=True)
        status = framework.get_status()
        assert status["groebner_max_n"] == 6
        assert "golden" in status["suites"]
        assert status["workers"] == 1

    def test_rejects_out_of_range_overrides(self):
        with pytest.raises(ConfigurationError):
            ChargeBasisFramework("missing/", configure_logging=False, workers=0)
