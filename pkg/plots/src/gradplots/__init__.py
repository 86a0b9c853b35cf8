"""Figures for loading-protocol runtime sweeps.

Everything here is a pure function of a sweep CSV produced by the
``gradprep sweep`` command; no physics is recomputed.
"""

from .render import PlotJob, build_figure, plot_runtime

__all__ = ["PlotJob", "build_figure", "plot_runtime"]
