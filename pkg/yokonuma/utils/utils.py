import warnings

from functools import wraps
from typing import Callable

from omegaconf import DictConfig

from yokonuma.utils import pylogger, rich_utils

log = pylogger.get_pylogger(__name__)


def task_wrapper(task_func: Callable) -> Callable:
    """Decorator for the task function of the batch entry point.

    The exception of a failed task is logged with its traceback, so that it ends up in
    the run log file, and re-raised for the caller to map to an exit code. The output
    dir is logged either way.
    """

    @wraps(task_func)
    def wrap(cfg: DictConfig):
        try:
            report, object_dict = task_func(cfg=cfg)
        except Exception:
            log.exception(f"Task <{cfg.get('command')}> raised")
            raise
        finally:
            if cfg.get("paths") and cfg.paths.get("output_dir"):
                log.info(f"Output dir: {cfg.paths.output_dir}")
        return report, object_dict

    return wrap


def extras(cfg: DictConfig) -> None:
    """Applies the flags of the `extras` config group before the command runs."""
    options = cfg.get("extras")
    if not options:
        log.warning("Extras config not found! <cfg.extras=null>")
        return

    if options.get("ignore_warnings"):
        log.info("Disabling python warnings! <cfg.extras.ignore_warnings=True>")
        warnings.filterwarnings("ignore")

    if options.get("enforce_tags"):
        log.info("Enforcing tags! <cfg.extras.enforce_tags=True>")
        rich_utils.enforce_tags(cfg, save_to_file=True)

    if options.get("print_config"):
        log.info("Printing config tree with Rich! <cfg.extras.print_config=True>")
        rich_utils.print_config_tree(cfg, resolve=True, save_to_file=True)
