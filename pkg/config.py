"""
Configuration settings for hookcalc
"""
import os

from errors import ResourceLimitError


def _env_bool(name, default=False):
    value = os.environ.get(name)
    if value is None:
        return default
    return str(value).strip().lower() in {'1', 'true', 'yes', 'on'}


def _env_list(name, default=''):
    value = os.environ.get(name, default)
    if value is None:
        return []
    return [item.strip() for item in str(value).split(',') if item.strip()]


def _load_env_file(env_path=None):
    """Load key=value pairs from a local .env file (or the given path) if present."""
    if env_path is None:
        env_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), '.env')
    if not os.path.exists(env_path):
        return

    try:
        with open(env_path, 'r', encoding='utf-8') as handle:
            for raw_line in handle:
                line = raw_line.strip()
                if not line or line.startswith('#') or '=' not in line:
                    continue
                key, value = line.split('=', 1)
                key = key.strip()
                value = value.strip().strip('"').strip("'")
                os.environ.setdefault(key, value)
    except Exception:
        # Keep config import resilient even if the file is malformed.
        pass


_load_env_file(os.environ.get('HOOKCALC_CONFIG'))
_load_env_file()


def _cap(name, default):
    return int(os.environ.get(f'HOOKCALC_{name}') or default)


class Config:
    # Engine caps
    PARTITION_N = _cap('PARTITION_N', 12)          # noncrossing / matchings
    PARTITION_ALL_N = _cap('PARTITION_ALL_N', 10)  # all / connected
    VHC_N = _cap('VHC_N', 10)                      # length of a base permutation
    BRUTE_PERM_N = _cap('BRUTE_PERM_N', 9)
    SERIES_ORDER = _cap('SERIES_ORDER', 30)
    TRANSFORM_N = _cap('TRANSFORM_N', 8)
    TREE_N = _cap('TREE_N', 10)
    TUTTE_EDGES = _cap('TUTTE_EDGES', 20)
    LINEXT_N = _cap('LINEXT_N', 16)
    SORTED_COUNT_M = _cap('SORTED_COUNT_M', 400)
    TWO_STACK_N = _cap('TWO_STACK_N', 11)
    THREE_STACK_N = _cap('THREE_STACK_N', 12)

    # Output and runtime
    OUTPUT_FORMAT = os.environ.get('HOOKCALC_OUTPUT_FORMAT') or 'json'
    OUTPUT_FORMATS = ['json', 'csv', 'text']
    SEED = int(os.environ.get('HOOKCALC_SEED') or 0)
    WORKERS = int(os.environ.get('HOOKCALC_WORKERS') or 1)
    LOG_LEVEL = os.environ.get('HOOKCALC_LOG_LEVEL') or 'WARNING'
    STRICT_CAPS = _env_bool('HOOKCALC_STRICT_CAPS', False)
    VERIFY_SUITES = _env_list('HOOKCALC_VERIFY_SUITES', '')

    # Beyond these the exhaustive engines take hours
    SAFE_LIMITS = {
        'PARTITION_N': 14,
        'PARTITION_ALL_N': 11,
        'VHC_N': 11,
        'BRUTE_PERM_N': 10,
        'TREE_N': 12,
        'TUTTE_EDGES': 24,
        'LINEXT_N': 22,
    }

    CAP_NAMES = [
        'PARTITION_N', 'PARTITION_ALL_N', 'VHC_N', 'BRUTE_PERM_N', 'SERIES_ORDER',
        'TRANSFORM_N', 'TREE_N', 'TUTTE_EDGES', 'LINEXT_N', 'SORTED_COUNT_M',
        'TWO_STACK_N', 'THREE_STACK_N',
    ]

    @classmethod
    def cap(cls, name):
        return getattr(cls, name)

    @classmethod
    def check_cap(cls, name, requested):
        """Raise ResourceLimitError when requested exceeds the named cap."""
        limit = cls.cap(name)
        if requested > limit:
            raise ResourceLimitError(name, limit, requested)

    @classmethod
    def caps(cls):
        return {name: cls.cap(name) for name in cls.CAP_NAMES}

    @classmethod
    def runtime_warnings(cls):
        warnings = []
        for name in cls.CAP_NAMES:
            value = cls.cap(name)
            if value <= 0:
                warnings.append(f'{name} must be positive (got {value})')
            safe = cls.SAFE_LIMITS.get(name)
            if safe is not None and value > safe:
                warnings.append(f'{name}={value} is above the tested limit {safe}; runs may not finish')

        if cls.OUTPUT_FORMAT not in cls.OUTPUT_FORMATS:
            warnings.append(f'Unknown output format {cls.OUTPUT_FORMAT!r}; using json')
        if cls.WORKERS < 1:
            warnings.append('HOOKCALC_WORKERS below 1; running serially')
        return warnings

    @classmethod
    def validate_runtime(cls):
        warnings = cls.runtime_warnings()
        if warnings and cls.STRICT_CAPS:
            raise ValueError('Unsafe runtime configuration: ' + '; '.join(warnings))
        return warnings
