from selection.base_selector import (
    BaseSelector,
    NoSelection,
    SelectionMethod,
    SelectionResult,
    gather_columns,
    gram_matrices,
)
from selection.coas_selector import COASSelector
from selection.acas_selector import ACASSelector, cosine_similarity
from selection.edas_selector import EDASSelector, min_euclidean_distance
from selection.subsets import DEFAULT_SUBSET_CAP, SubsetIterator, enumerate_subsets

# Diccionario de selectores disponibles
AVAILABLE_SELECTORS = {
    SelectionMethod.NONE: NoSelection,
    SelectionMethod.COAS: COASSelector,
    SelectionMethod.ACAS: ACASSelector,
    SelectionMethod.EDAS: EDASSelector,
}


def get_selector(method, constellation=None, subset_cap=DEFAULT_SUBSET_CAP):
    """
    Obtiene una instancia del selector especificado.

    Args:
        method (str | SelectionMethod): 'none', 'coas', 'acas' o 'edas'.
        constellation (Constellation, optional): Necesaria para EDAS.
        subset_cap (int): Límite de subconjuntos para ACAS/EDAS.

    Returns:
        BaseSelector: Instancia del selector.

    Raises:
        DimensionError: Si la técnica no está disponible.
    """
    method = SelectionMethod.parse(method)
    if method is SelectionMethod.NONE:
        return NoSelection()
    if method is SelectionMethod.EDAS:
        return EDASSelector(constellation, subset_cap=subset_cap)
    return AVAILABLE_SELECTORS[method](subset_cap=subset_cap)


def get_available_methods():
    """
    Devuelve una lista de las técnicas disponibles.

    Returns:
        list: Nombres de las técnicas.
    """
    return [m.value for m in AVAILABLE_SELECTORS]


def select_coas(g, n_s):
    """COAS sobre una matriz de canal; ver COASSelector."""
    return COASSelector().select(g, n_s)


def select_acas(g, n_s, subset_cap=DEFAULT_SUBSET_CAP):
    """ACAS sobre una matriz de canal; ver ACASSelector."""
    return ACASSelector(subset_cap=subset_cap).select(g, n_s)


def select_edas(g, n_s, constellation, subset_cap=DEFAULT_SUBSET_CAP):
    """EDAS sobre una matriz de canal; ver EDASSelector."""
    return EDASSelector(constellation, subset_cap=subset_cap).select(g, n_s)


__all__ = [
    'BaseSelector',
    'NoSelection',
    'COASSelector',
    'ACASSelector',
    'EDASSelector',
    'SelectionMethod',
    'SelectionResult',
    'SubsetIterator',
    'AVAILABLE_SELECTORS',
    'get_selector',
    'get_available_methods',
    'select_coas',
    'select_acas',
    'select_edas',
    'min_euclidean_distance',
    'cosine_similarity',
    'enumerate_subsets',
    'gather_columns',
    'gram_matrices',
]
