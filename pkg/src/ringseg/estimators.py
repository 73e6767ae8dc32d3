"""scikit-learn style front-ends for filtering and iterative segmentation.

Both estimators take a single 2-D gray image as ``X``. They return the
same container type they were given: a GrayImage stays a GrayImage, an
array-like comes back as an int64 ndarray.

Examples
--------
>>> import numpy as np
>>> img = np.full((8, 8), 40)
>>> img[:, 4:] = 200
>>> seg = MSHiSegmenter(hs=3, hr=12).fit(img)
>>> seg.n_iter_, seg.hit_cap_
(1, False)
"""

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .mean_shift import FilterConfig, filter_pass
from .mshi import MshiConfig, StoppingCriterion, run
from .validation import as_output, check_gray_image


class MeanShiftFilter(TransformerMixin, BaseEstimator):
    """Single joint spatial-range mean-shift pass.

    Parameters
    ----------
    hs : float, default=15
        Spatial bandwidth in pixels.
    hr : float, default=12
        Range bandwidth in gray levels.
    kernel : {"uniform", "epanechnikov"}, default="uniform"
    inner_tol : float, default=0.5
        Joint-space displacement below which mode seeking stops.
    inner_max_iter : int, default=100
    modulus : int, optional
        Ring size for array inputs; 256 when omitted.
    """

    def __init__(self, hs=15.0, hr=12.0, kernel="uniform", inner_tol=0.5,
                 inner_max_iter=100, modulus=None):
        self.hs = hs
        self.hr = hr
        self.kernel = kernel
        self.inner_tol = inner_tol
        self.inner_max_iter = inner_max_iter
        self.modulus = modulus

    def _filter_config(self):
        return FilterConfig(self.hs, self.hr, self.kernel, self.inner_tol,
                            self.inner_max_iter)

    def fit(self, X, y=None):
        image = check_gray_image(X, self.modulus)
        self.config_ = self._filter_config()
        self.modulus_ = image.modulus
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        image = check_gray_image(X, self.modulus_)
        return as_output(filter_pass(image, self.config_), X)


class MSHiSegmenter(TransformerMixin, BaseEstimator):
    """Iterated mean-shift filtering stopped by NED or the weak-entropy index.

    Parameters
    ----------
    hs, hr, kernel, inner_tol, inner_max_iter, modulus
        As for :class:`MeanShiftFilter`.
    criterion : {"ned", "we"}, default="ned"
    epsilon : float, optional
        Stopping threshold in bits; 0.9 for NED and 0.01 for WE if omitted.
    max_iter : int, default=50
        Cap on outer filtering passes.

    Attributes
    ----------
    segmented_ : GrayImage
    trace_ : ConvergenceTrace
    n_iter_ : int
    hit_cap_ : bool
        True when ``max_iter`` passes ran without meeting ``epsilon``.
    """

    def __init__(self, hs=15.0, hr=12.0, criterion="ned", epsilon=None,
                 max_iter=50, kernel="uniform", inner_tol=0.5,
                 inner_max_iter=100, modulus=None):
        self.hs = hs
        self.hr = hr
        self.criterion = criterion
        self.epsilon = epsilon
        self.max_iter = max_iter
        self.kernel = kernel
        self.inner_tol = inner_tol
        self.inner_max_iter = inner_max_iter
        self.modulus = modulus

    def _config(self):
        return MshiConfig(
            FilterConfig(self.hs, self.hr, self.kernel, self.inner_tol,
                         self.inner_max_iter),
            StoppingCriterion(self.criterion, self.epsilon),
            self.max_iter,
        )

    def fit(self, X, y=None):
        image = check_gray_image(X, self.modulus)
        self.config_ = self._config()
        self.modulus_ = image.modulus
        self.segmented_, self.trace_, self.hit_cap_, _ = run(image, self.config_)
        self.n_iter_ = len(self.trace_)
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        image = check_gray_image(X, self.modulus_)
        return as_output(run(image, self.config_).segmented, X)

    def fit_transform(self, X, y=None, **fit_params):
        return as_output(self.fit(X).segmented_, X)
