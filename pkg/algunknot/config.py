"""
Settings from environmental variables and config files.
"""
import os
from dotenv import load_dotenv
from .constructors import DEFAULT_CATALOG_PATH
from .certify import (
    TARGETS, RELATOR_KINDS, register_target, register_relator_kind
)
from .certify._budget import (
    DEFAULT_MAX_COSETS, DEFAULT_MAX_WORD_LENGTH, DEFAULT_TIME_LIMIT
)

BASE_DIR = os.path.abspath(os.path.dirname(__file__))

# Load the .env file into environmental variables.
if os.getenv('ALGUNKNOT_DIR') is None:
    load_dotenv()

# Fallback is to use temp dir inside repo if ALGUNKNOT_DIR is not available.
ALGUNKNOT_DIR = os.path.join(os.path.dirname(BASE_DIR), 'temp')

# Load the output directory from environmental variables.
if os.getenv('ALGUNKNOT_DIR') is not None:
    ALGUNKNOT_DIR = os.path.abspath(str(os.getenv('ALGUNKNOT_DIR')))
    if not os.path.isdir(ALGUNKNOT_DIR):
        raise FileNotFoundError(
            f'ALGUNKNOT_DIR={ALGUNKNOT_DIR} is not a valid directory. '
            'Check .env configuration.'
        )
else:
    os.makedirs(ALGUNKNOT_DIR, exist_ok=True)

CACHE_DIR = os.path.join(ALGUNKNOT_DIR, 'certificates')
if os.getenv('ALGUNKNOT_CACHE_DIR') is not None:
    CACHE_DIR = os.path.abspath(str(os.getenv('ALGUNKNOT_CACHE_DIR')))

CATALOG_PATH = DEFAULT_CATALOG_PATH
if os.getenv('ALGUNKNOT_CATALOG') is not None:
    CATALOG_PATH = os.path.abspath(str(os.getenv('ALGUNKNOT_CATALOG')))


def _int_setting(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f'{name}={value!r} is not an integer') from None


MAX_COSETS = _int_setting('ALGUNKNOT_MAX_COSETS', DEFAULT_MAX_COSETS)
MAX_WORD_LENGTH = _int_setting(
    'ALGUNKNOT_MAX_WORD_LENGTH', DEFAULT_MAX_WORD_LENGTH
)
TIME_LIMIT = float(os.getenv('ALGUNKNOT_TIME_LIMIT', DEFAULT_TIME_LIMIT))

__all__ = [
    'BASE_DIR',
    'ALGUNKNOT_DIR',
    'CACHE_DIR',
    'CATALOG_PATH',
    'MAX_COSETS',
    'MAX_WORD_LENGTH',
    'TIME_LIMIT',
    'TARGETS',
    'RELATOR_KINDS',
    'register_target',
    'register_relator_kind',
]
