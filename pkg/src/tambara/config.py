import os

from .errors import SizeCapError

DEFAULT_CAP = 10**6


def default_cap():
    """Enumeration cap, overridable through the TAMBARA_CAP environment variable."""
    env = os.environ.get("TAMBARA_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


def check_cap(count, cap=None, what="candidates"):
    cap = default_cap() if cap is None else cap
    if count > cap:
        raise SizeCapError(f"{what}: {count} exceeds cap {cap}")
