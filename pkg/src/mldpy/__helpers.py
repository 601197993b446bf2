import numpy as np


RNG = np.random.RandomState(2021)
"""
The default random value generator.
"""


class PreconditionError(ValueError):
    """
    An operation was called outside of its precondition, e.g. a zero weight vector or the minus-infinity witness of a
    log canonical multiideal.
    """
    pass


class FieldMismatchError(ValueError):
    """
    Polynomial data over different coefficient fields were combined.
    """
    pass


def set_rng(seed):
    """
    Sets the default random state.

    Parameters
    ----------
    seed: int
    """
    global RNG
    RNG = np.random.RandomState(seed)


def get_rng(rng=None):
    """
    Resolves a random state argument: None gives the default generator, an integer seeds a new one.

    Parameters
    ----------
    rng: np.random.RandomState | int, optional

    Returns
    -------
    np.random.RandomState
    """
    if rng is None:
        return RNG
    if isinstance(rng, (int, np.integer)):
        return np.random.RandomState(int(rng))
    return rng
