"""Hochschild (co)homology of k<x,y>/(x^2, xy+qyx, y^2) with twisted coefficients."""
