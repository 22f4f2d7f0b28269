"""
Batch computation of intersection polynomials over collections of knots.
"""

from collections.abc import Mapping

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .invariants import all_invariants
from .knotcli._catalog import Catalog, distinguish
from .utils import check_diagram, check_n_jobs
from .utils._parallelize import parallel_loop


class IntersectionPolynomials(BaseEstimator):
    """
    Compute the writhe and intersection polynomials of many knots.

    The estimator is fitted on a collection of Gauss diagrams, then answers
    queries about single knots, the whole collection or pairs of knots.
    Results never depend on ``n_jobs``.

    Parameters
    ----------
    n_jobs : int, default=1
        Number of jobs to run in parallel in :meth:`all`. Use `-1` to use all
        available processors.

    verbose : int, default=0
        Show a progress bar in :meth:`all` when positive.

    Attributes
    ----------
    names_ : list of str
        Knot names, in input order. Codes serve as names when the input has
        none.

    diagrams_ : list of GaussDiagram
        The validated diagrams.

    Examples
    --------
    >>> from vknot import IntersectionPolynomials
    >>> model = IntersectionPolynomials().fit({"4.39": "O1-O2-O3-U4+U1-U3-O4+U2-"})
    >>> str(model.individual("4.39").I)
    '-2t^3+4t^2-2t'
    """

    def __init__(self, n_jobs=1, verbose=0):
        self.n_jobs = n_jobs
        self.verbose = verbose

    def fit(self, knots, y=None):
        """
        Validate and store a collection of knots.

        Parameters
        ----------
        knots : Catalog, mapping of str to code, or sequence of codes
            Codes may be strings or GaussDiagram objects.

        y : None
            Ignored.

        Returns
        -------
        self : IntersectionPolynomials
        """
        check_n_jobs(self.n_jobs)

        if isinstance(knots, Catalog):
            names = knots.names
            diagrams = [record.code for record in knots]
        elif isinstance(knots, Mapping):
            names = [str(name) for name in knots]
            diagrams = [check_diagram(code) for code in knots.values()]
        else:
            diagrams = [check_diagram(code) for code in knots]
            names = [d.to_code() for d in diagrams]

        self.names_ = names
        self.diagrams_ = diagrams
        return self

    def _diagram(self, knot):
        if isinstance(knot, int) and not isinstance(knot, bool):
            check_is_fitted(self)
            return self.diagrams_[knot]
        if isinstance(knot, str) and hasattr(self, "names_") and knot in self.names_:
            return self.diagrams_[self.names_.index(knot)]
        return check_diagram(knot)

    def individual(self, knot):
        """
        Invariants of one knot.

        Parameters
        ----------
        knot : int, str or GaussDiagram
            Position in the fitted collection, a fitted name, or any Gauss
            code or diagram.

        Returns
        -------
        InvariantSet
        """
        return all_invariants(self._diagram(knot))

    def all(self):
        """
        Invariants of every fitted knot, in input order.

        Returns
        -------
        list of InvariantSet
        """
        check_is_fitted(self)
        return parallel_loop(
            all_invariants,
            self.diagrams_,
            n_jobs=self.n_jobs,
            progress_bar=bool(self.verbose),
            description="invariants",
        )

    def pairwise(self, knot1, knot2):
        """
        Compare W, I, II and III of two knots.

        Parameters
        ----------
        knot1, knot2 : int, str or GaussDiagram
            As in :meth:`individual`.

        Returns
        -------
        DistinguishReport
        """
        return distinguish(self.individual(knot1), self.individual(knot2))
