from .csv_loader import CSVLoader
from .param_file import ParamFile
from .drbg import Drbg
from .hashing import HashSuite
from .config import Settings, configure_logging, load_settings
