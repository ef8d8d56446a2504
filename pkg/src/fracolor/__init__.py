"""Colorings of fractional graph powers G^{m/n}."""
