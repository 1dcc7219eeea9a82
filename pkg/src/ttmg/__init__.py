"""Modality-aware style projection and modality-sensitive instance whitening
for binary segmentation, on a small numpy autodiff engine."""

__version__ = "0.1.0"
