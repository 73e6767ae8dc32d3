"""Gray-image segmentation by iterated mean shift with a ring-entropy stop rule."""

from .shannon import Histogram, entropy, entropy_of_histogram, histogram
from .estimators import MeanShiftFilter, MSHiSegmenter
from .exceptions import (IncompatibleRingError, PgmLengthError, PgmParseError,
                         PixelRangeError, RingsegError, ShapeError)
from .fileio import emit_csv, extract_profile, read_pgm, write_pgm
from .mean_shift import (FilterConfig, ModeSeekState, epanechnikov_profile,
                         filter_pass, mean_shift_step, mode_seek)
from .metrics import is_weak_equivalent, ned, we_index
from .mshi import (ConvergenceTrace, MshiConfig, StoppingCriterion,
                   criterion_value, run, trace_total_variation)
from .ring_image import (GrayImage, ScalarImage, canonical_representative,
                         is_scalar, is_strong_equivalent, ring_add, ring_mul,
                         ring_neg, ring_sub, saturating_add, saturating_sub)

__version__ = "0.1.0"
