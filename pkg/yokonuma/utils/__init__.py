from yokonuma.utils.pylogger import get_pylogger
from yokonuma.utils.rich_utils import enforce_tags, print_config_tree, print_report
from yokonuma.utils.utils import extras, task_wrapper
