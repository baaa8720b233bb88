"""Summation-by-parts operators in the correction procedure via reconstruction (CPR) framework.

One-dimensional solvers for inviscid Burgers' equation with skew-symmetric
correction terms and for linear advection on curvilinear grids.
"""

__version__ = "0.1.0"
