"""Springer-theoretic invariants of classical Weyl groups, computed exactly."""
