from taulab.repositories import algebra_repository

__all__ = ["algebra_repository"]
