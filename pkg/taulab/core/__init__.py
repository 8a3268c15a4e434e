from taulab.core.field import PrimeField, default_field

__all__ = ["PrimeField", "default_field"]
