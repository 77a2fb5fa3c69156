"""Salted password digests for official logins.

Digests are self-describing strings, pbkdf2_sha256$<iterations>$<salt>$<hash>,
so stored credentials verify regardless of the iteration count they were
created with. Plaintext passwords are never stored.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
from functools import lru_cache

SCHEME = "pbkdf2_sha256"
DEFAULT_ITERATIONS = 200_000


def make_digest(password: str, *, iterations: int = DEFAULT_ITERATIONS,
                salt: bytes | None = None) -> str:
    """Derive a salted digest for `password`."""
    if iterations < 1:
        raise ValueError("iterations must be positive")
    if salt is None:
        salt = secrets.token_bytes(16)
    key = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return f"{SCHEME}${iterations}${salt.hex()}${key.hex()}"


def verify_digest(password: str, digest: str) -> bool:
    """Check `password` against a stored digest; False for any malformed digest."""
    try:
        scheme, iter_text, salt_hex, key_hex = digest.split("$")
        iterations = int(iter_text)
        salt = bytes.fromhex(salt_hex)
        expected = bytes.fromhex(key_hex)
    except (ValueError, AttributeError):
        return False
    if scheme != SCHEME or iterations < 1:
        return False
    key = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return hmac.compare_digest(key, expected)


@lru_cache(maxsize=1)
def dummy_digest() -> str:
    """A throwaway digest verified against when a username does not exist.

    Keeps the work done for unknown-user and wrong-password failures alike,
    so response timing does not reveal which credential field was wrong.
    """
    return make_digest(secrets.token_hex(16))
