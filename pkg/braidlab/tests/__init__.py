from braidlab.tests.utils import get_test_data_path
from braidlab.utils import enable_logger

__all__ = ["get_test_data_path"]

enable_logger("DEBUG", True, True)
