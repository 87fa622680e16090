"""scikit-learn compatible featurizer: a collection of graphs to a matrix of exact parameters."""

from __future__ import annotations

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import auxiliary
from ._cover import BudgetExceeded
from .dimension import DisconnectedGraphError, dimension, twin_lower_bound
from .validation import check_budget, check_graph, check_n_jobs, check_variant

DEFAULT_PARAMETERS = ("metric", "adjacency", "local_metric", "local_adjacency")

_AUXILIARY = {
    "domination": auxiliary.domination_number,
    "vertex_cover": auxiliary.vertex_cover_number,
    "independence": auxiliary.independence_number,
    "locating_dominating": auxiliary.min_locating_dominating,
}


def _column_name(name: str) -> str:
    if name in _AUXILIARY or name == "twin_lower_bound":
        return name
    return str(check_variant(name))


def _evaluate(graph, name, max_nodes, on_error):
    try:
        if name == "twin_lower_bound":
            return float(twin_lower_bound(graph))
        if name in _AUXILIARY:
            return float(_AUXILIARY[name](graph, max_nodes).value)
        return float(dimension(graph, name, max_nodes).value)
    except (DisconnectedGraphError, BudgetExceeded):
        if on_error == "nan":
            return np.nan
        raise


def _row(graph, names, max_nodes, on_error):
    return [_evaluate(graph, name, max_nodes, on_error) for name in names]


class GraphParameterTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to its exact dimension-type parameters.

    Parameters
    ----------
    parameters : sequence of str
        Column order. Dimension variants (``metric``, ``adim``, ``truncated:3``, ...)
        plus ``domination``, ``vertex_cover``, ``independence``,
        ``locating_dominating`` and ``twin_lower_bound``.
    max_nodes : int or None
        Search node cap per solve.
    n_jobs : int or None
        Graphs are solved in parallel across this many workers; output is
        identical for every value.
    on_error : {"raise", "nan"}
        What to do for disconnected input to a metric kind or an exhausted budget.
    """

    def __init__(self, parameters=DEFAULT_PARAMETERS, max_nodes=None, n_jobs=None, on_error="raise"):
        self.parameters = parameters
        self.max_nodes = max_nodes
        self.n_jobs = n_jobs
        self.on_error = on_error

    def _validate(self):
        if self.on_error not in ("raise", "nan"):
            raise ValueError(f"on_error must be 'raise' or 'nan', got {self.on_error!r}")
        if isinstance(self.parameters, str) or not len(self.parameters):
            raise ValueError("parameters must be a non-empty sequence of names")
        names = [_column_name(p) for p in self.parameters]
        return names, check_budget(self.max_nodes), check_n_jobs(self.n_jobs)

    def fit(self, X, y=None):
        names, _, _ = self._validate()
        [check_graph(g) for g in X]
        self.feature_names_out_ = np.asarray(names, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        names, max_nodes, n_jobs = self._validate()
        graphs = [check_graph(g) for g in X]
        if n_jobs == 1 or len(graphs) < 2:
            rows = [_row(g, names, max_nodes, self.on_error) for g in graphs]
        else:
            rows = Parallel(n_jobs=n_jobs)(delayed(_row)(g, names, max_nodes, self.on_error) for g in graphs)
        return np.asarray(rows, dtype=float).reshape(len(graphs), len(names))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()
