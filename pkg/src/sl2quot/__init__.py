"""Invariants of the homogeneous spaces G / phi_u(SL2)."""
