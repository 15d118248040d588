"""Unified motion-text diffusion at desk scale.

Two temporally aligned modalities -- a motion feature sequence and a
per-frame text-embedding sequence -- are diffused with independent
timesteps under optional global text conditioning. The package covers the
full pipeline: synthetic corpus generation with oracle labels, text
embedding compression and nearest-neighbor decoding, the two-timestep
diffusion model, samplers for every conditioning mode, an evaluation
battery, and a CLI.
"""

__version__ = "0.1.0"

from mtdiff.errors import InputError, NumericalError

__all__ = ["InputError", "NumericalError", "__version__"]
