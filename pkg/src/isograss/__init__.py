"""IsoGrass - exact cohomology of oriented isotropic Grassmannians and degree obstructions."""

__version__ = "0.1.0"
__author__ = "IsoGrass Team"
__description__ = (
    "Exact rational cohomology of oriented isotropic Grassmannians and Brouwer degree obstructions"
)
