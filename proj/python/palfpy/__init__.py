from ._palf import PalfError, alexander_torus, build, family_genera, grid, tb, verify

__all__ = ["PalfError", "alexander_torus", "build", "family_genera", "grid", "tb", "verify"]
