"""Exact automorphism groups, diagonal subgroups, and isomorphism certificates
for finite-dimensional idempotent evolution algebras."""

__version__ = "0.1.0"
