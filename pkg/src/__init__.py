"""polardim: polarisation as loss of RDPG embedding dimensionality."""

__version__ = "0.1.0"
