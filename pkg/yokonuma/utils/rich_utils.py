from pathlib import Path
from typing import Sequence

import rich
import rich.syntax
import rich.tree

from hydra.core.hydra_config import HydraConfig
from omegaconf import DictConfig, OmegaConf, open_dict
from rich.prompt import Prompt

from yokonuma.utils import pylogger

log = pylogger.get_pylogger(__name__)

# groups shown first in the config tree; the rest follow in config order
PRINT_ORDER = ("command", "algebra", "checks", "mul", "paths", "extras")


def print_config_tree(
    cfg: DictConfig,
    print_order: Sequence[str] = PRINT_ORDER,
    resolve: bool = True,
    save_to_file: bool = False,
) -> None:
    """Prints the composed config as a rich tree, one branch per top level key.

    Args:
        cfg (DictConfig): Configuration composed by Hydra.
        print_order (Sequence[str], optional): Keys printed first, in this order.
        resolve (bool, optional): Whether to resolve interpolations such as the output dir.
        save_to_file (bool, optional): Whether to write the tree to ``config_tree.log`` in
            the run directory.
    """
    missing = [key for key in print_order if key not in cfg]
    if missing:
        log.warning(f"Config keys {missing} not found, not printing them")
    keys = [key for key in print_order if key in cfg]
    keys += [key for key in cfg if key not in keys]

    style = "dim"
    tree = rich.tree.Tree("CONFIG", style=style, guide_style=style)
    for key in keys:
        node = cfg[key]
        if isinstance(node, DictConfig):
            content = OmegaConf.to_yaml(node, resolve=resolve)
        else:
            content = str(node)
        tree.add(key, style=style, guide_style=style).add(rich.syntax.Syntax(content, "yaml"))

    rich.print(tree)
    if save_to_file:
        _write(tree, Path(cfg.paths.output_dir, "config_tree.log"))


def enforce_tags(cfg: DictConfig, save_to_file: bool = False) -> None:
    """Asks for run tags on the command line when the config has none.

    A multirun cannot prompt, so it fails instead.
    """
    if not cfg.get("tags"):
        if "id" in HydraConfig().cfg.hydra.job:
            raise ValueError("Specify tags before launching a multirun!")
        log.warning("No tags provided in config. Prompting user to input tags...")
        answer = Prompt.ask("Enter a list of comma separated tags", default="dev")
        with open_dict(cfg):
            cfg.tags = [tag.strip() for tag in answer.split(",") if tag.strip()]
        log.info(f"Tags: {cfg.tags}")

    if save_to_file:
        _write(cfg.tags, Path(cfg.paths.output_dir, "tags.log"))


def print_report(report, console: bool = True, save_to_file: str | Path | None = None) -> None:
    """Prints the check summary table of a report and optionally saves it."""
    table = report.table()
    if console:
        rich.print(table)
    if save_to_file:
        _write(table, Path(save_to_file))


def _write(renderable, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file:
        rich.print(renderable, file=file)
