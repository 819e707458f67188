"""Shared lock for the per-n enumeration and matrix caches."""

import threading

cache_lock = threading.RLock()
