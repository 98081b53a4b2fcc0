import json
import os

import pyrootutils
import pytest

from hydra import compose, initialize
from hydra.core.global_hydra import GlobalHydra
from hydra.core.hydra_config import HydraConfig
from omegaconf import DictConfig, open_dict

from yokonuma.errors import SchemaError
from yokonuma.kernel import AlgebraContext, save_element
from yokonuma.kernel.io import load_element
from yokonuma.tasks.commands import (
    COMMAND_REGISTRY,
    example_command,
    get_command,
    tableaux_checks,
)
from yokonuma.tasks.verify import EXIT_FAILED, EXIT_INVALID, EXIT_OK, execute, run
from yokonuma.utils import enforce_tags, print_config_tree

slow = pytest.mark.skipif(not os.environ.get("YOKONUMA_SLOW"), reason="set YOKONUMA_SLOW=1")


@pytest.fixture(scope="package")
def cfg_verify_global() -> DictConfig:
    with initialize(version_base="1.3", config_path="../configs"):
        cfg = compose(config_name="main.yaml", return_hydra_config=True, overrides=[])

        # set defaults for all tests
        with open_dict(cfg):
            cfg.paths.root_dir = str(pyrootutils.find_root(indicator=".gitignore"))
            cfg.extras.print_config = False
            cfg.extras.enforce_tags = False
            cfg.checks.samples = 20

    return cfg


@pytest.fixture(scope="function")
def cfg_verify(cfg_verify_global, tmp_path) -> DictConfig:
    cfg = cfg_verify_global.copy()

    with open_dict(cfg):
        cfg.paths.output_dir = str(tmp_path)
        cfg.paths.log_dir = str(tmp_path)

    HydraConfig().set_config(cfg)
    yield cfg

    GlobalHydra.instance().clear()


@pytest.mark.parametrize("command", ["relations", "basis", "tableaux", "frobenius"])
def test_run_command(cfg_verify, tmp_path, command):
    with open_dict(cfg_verify):
        cfg_verify.command = command
    report, objects = run(cfg_verify)
    assert report.ok
    assert report.checks
    assert isinstance(objects["context"], AlgebraContext)
    saved = json.loads((tmp_path / "report.json").read_text())
    assert saved["command"] == command
    assert (tmp_path / "checks.log").exists()


def test_execute_passes(cfg_verify):
    assert execute(cfg_verify) == EXIT_OK


def test_gated_parameters_are_refused(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.command = "idempotents"
        cfg_verify.algebra.v = "1,4"
    assert execute(cfg_verify) == EXIT_INVALID


def test_unknown_command_is_refused(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.command = "nothing"
    assert execute(cfg_verify) == EXIT_INVALID
    with pytest.raises(SchemaError):
        get_command("nothing")


def test_size_guard_is_refused(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.command = "cellular"
        cfg_verify.checks.max_dimension = 10
    assert execute(cfg_verify) == EXIT_INVALID


def test_invalid_parameters_are_refused(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.algebra.q = "0"
    assert execute(cfg_verify) == EXIT_INVALID


def test_failing_identities_exit_with_one(cfg_verify, monkeypatch):
    from yokonuma.tasks.report import Check

    def broken(context, cfg):
        return [Check.of("broken", False)], {}

    monkeypatch.setitem(COMMAND_REGISTRY, "relations", broken)
    assert execute(cfg_verify) == EXIT_FAILED


def test_mul(cfg_verify, tmp_path):
    context = AlgebraContext.from_params(r=2, n=2, d=2, q="2", v="1,5")
    left, right = context.X(2) + context.t(1), context.g(1)
    save_element(left, tmp_path / "left.json")
    save_element(right, tmp_path / "right.json")
    with open_dict(cfg_verify):
        cfg_verify.command = "mul"
        cfg_verify.mul.left = str(tmp_path / "left.json")
        cfg_verify.mul.right = str(tmp_path / "right.json")
        cfg_verify.mul.output = str(tmp_path / "product.json")
    report, _ = run(cfg_verify)
    assert report.ok and not report.checks
    assert load_element(tmp_path / "product.json", context) == left * right


def test_mul_needs_both_files(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.command = "mul"
    assert execute(cfg_verify) == EXIT_INVALID


def test_tableaux_counts():
    checks, extra = tableaux_checks(2, 2, 3)
    assert all(c.ok for c in checks)
    assert sum(extra["standard_tableaux"].values()) > 0
    assert extra["shapes"] == len(extra["standard_tableaux"])


def test_config_tree_and_tags_are_saved(cfg_verify, tmp_path):
    print_config_tree(cfg_verify, resolve=False, save_to_file=True)
    enforce_tags(cfg_verify, save_to_file=True)
    assert "algebra" in (tmp_path / "config_tree.log").read_text()
    assert "dev" in (tmp_path / "tags.log").read_text()


def test_report_table_is_saved_without_printing(cfg_verify, tmp_path):
    with open_dict(cfg_verify):
        cfg_verify.extras.print_report = False
    assert execute(cfg_verify) == EXIT_OK
    assert "relations" in (tmp_path / "checks.log").read_text()


def compose_worked_example(tmp_path) -> DictConfig:
    with initialize(version_base="1.3", config_path="../configs"):
        cfg = compose(
            config_name="main.yaml",
            return_hydra_config=True,
            overrides=["experiment=worked_example"],
        )
    with open_dict(cfg):
        cfg.paths.root_dir = str(pyrootutils.find_root(indicator=".gitignore"))
        cfg.paths.output_dir = str(tmp_path)
        cfg.paths.log_dir = str(tmp_path)
        cfg.extras.print_config = False
        cfg.extras.enforce_tags = False
    return cfg


def test_example_paper_is_registered(tmp_path):
    assert get_command("example-paper") is example_command
    cfg = compose_worked_example(tmp_path)
    assert cfg.command == "example-paper"
    assert (cfg.algebra.r, cfg.algebra.n, cfg.algebra.d) == (2, 4, 2)


def test_example_paper_refuses_other_ranks(cfg_verify):
    with open_dict(cfg_verify):
        cfg_verify.command = "example-paper"
    assert execute(cfg_verify) == EXIT_INVALID


@slow
def test_example_paper_passes(tmp_path):
    cfg = compose_worked_example(tmp_path)
    HydraConfig().set_config(cfg)
    try:
        assert execute(cfg) == EXIT_OK
        saved = json.loads((tmp_path / "report.json").read_text())
        assert saved["command"] == "example-paper"
    finally:
        GlobalHydra.instance().clear()
