"""cheeger - Cheeger constants and spectral gaps of discrete and metric graphs."""
__version__ = "1.0.0"
