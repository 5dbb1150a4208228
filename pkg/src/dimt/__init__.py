"""Document image machine translation at desk scale.

A frozen mix-modality encoder guides an image-only alignment encoder
during training; at inference only the lightweight student (alignment
encoder, image encoder, translation decoder) runs.
"""

__version__ = "0.1.0"
