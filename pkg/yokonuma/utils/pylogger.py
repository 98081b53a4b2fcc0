import logging


def get_pylogger(name=__name__) -> logging.Logger:
    """Initializes the python command line logger of a module.

    Handlers and formatting come from the hydra job logging config (colorlog) when
    running through ``run.py``; library use inherits whatever the caller configured.
    """

    return logging.getLogger(name)
