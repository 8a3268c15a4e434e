"""Homological algebra of finite-dimensional algebras over prime fields."""

__version__ = "1.0.0"
