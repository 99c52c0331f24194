"""Selects the compiled kernels when available, the NumPy fallback otherwise."""

from __future__ import annotations

try:
    from cocircular import _kernels as impl  # type: ignore[attr-defined]
except ImportError:  # extension not built
    from cocircular import _kernels_py as impl  # type: ignore[no-redef]

BACKEND = impl.BACKEND_NAME
COLLISION_EPS = impl.COLLISION_EPS


def active_backend() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND


def set_backend(name: str) -> None:
    """Force a backend by name; used by benchmarks and backend tests."""
    global impl, BACKEND
    modules = available_backends()
    if name not in modules:
        raise KeyError(f"backend {name!r} not available (have {sorted(modules)})")
    impl = modules[name]
    BACKEND = name


def available_backends() -> dict[str, object]:
    """All importable kernel modules, keyed by backend name."""
    from cocircular import _kernels_py

    found: dict[str, object] = {_kernels_py.BACKEND_NAME: _kernels_py}
    try:
        from cocircular import _kernels  # type: ignore[attr-defined]

        found[_kernels.BACKEND_NAME] = _kernels
    except ImportError:
        pass
    return found
