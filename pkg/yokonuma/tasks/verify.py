import sys
import time

from typing import Tuple

import hydra
import pyrootutils

from hydra.errors import InstantiationException
from omegaconf import DictConfig

from yokonuma import utils
from yokonuma.errors import SchemaError, SemisimplicityError, SizeLimitError
from yokonuma.kernel import AlgebraContext
from yokonuma.tasks.commands import get_command
from yokonuma.tasks.report import Report

pyrootutils.setup_root(__file__, indicator=".gitignore", pythonpath=True)


log = utils.get_pylogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

# parameters the command refuses, as opposed to identities that failed
INVALID_ERRORS = (SchemaError, SemisimplicityError, SizeLimitError)


def _root_cause(exc: BaseException) -> BaseException:
    while isinstance(exc, InstantiationException) and exc.__cause__ is not None:
        exc = exc.__cause__
    return exc


def instantiate_algebra(cfg: DictConfig) -> AlgebraContext:
    log.info(f"Instantiating algebra <{cfg.algebra._target_}>")
    try:
        return hydra.utils.instantiate(cfg.algebra)
    except InstantiationException as exc:
        raise _root_cause(exc) from None


@utils.task_wrapper
def run(cfg: DictConfig) -> Tuple[Report, dict]:
    """Runs one verification command and writes its report.

    This method is wrapped in optional @task_wrapper decorator, that controls the behavior
    during failure.

    Args:
        cfg (DictConfig): Configuration composed by Hydra.
    Returns:
        Tuple[Report, dict]: The report and a dict with all instantiated objects.
    """
    command = get_command(cfg.command)
    context = instantiate_algebra(cfg)
    log.info(f"Running <{cfg.command}> on {context}")

    start = time.perf_counter()
    checks, extra = command(context, cfg)
    report = Report(cfg.command, context.params(), extra=extra)
    report.extend(checks)
    report.timing = time.perf_counter() - start
    log.info(f"<{cfg.command}> finished in {report.timing:.2f}s: {len(checks)} checks")
    log.debug(f"Cache statistics: {context.cache_stats()}")

    if cfg.get("report_file"):
        report.save(cfg.report_file)
    table_file = None
    if cfg.get("paths") and cfg.paths.get("output_dir"):
        table_file = f"{cfg.paths.output_dir}/checks.log"
    console = cfg.extras.get("print_report", True) if cfg.get("extras") else True
    utils.print_report(report, console=console, save_to_file=table_file)

    object_dict = {"cfg": cfg, "context": context, "report": report}
    return report, object_dict


def execute(cfg: DictConfig) -> int:
    """Runs the configured command and maps its outcome to an exit code."""
    utils.extras(cfg)
    try:
        report, _ = run(cfg)
    except INVALID_ERRORS as exc:
        log.error(f"Refused: {exc}")
        return EXIT_INVALID
    if not report.ok:
        log.error(f"<{cfg.command}> found failing identities")
        return EXIT_FAILED
    return EXIT_OK


@hydra.main(version_base="1.3", config_path="../../configs", config_name="main.yaml")
def verify(cfg: DictConfig) -> None:
    code = execute(cfg)
    if code != EXIT_OK:
        sys.exit(code)


if __name__ == "__main__":
    verify()
