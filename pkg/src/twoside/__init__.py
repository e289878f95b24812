"""Two-sided vector spaces over Q(t): construction, duals, adjunctions and
truncated non-commutative symmetric algebras, in exact arithmetic."""

__version__ = "0.1.0"
