"""Exception types raised by the chemistry core."""


class ChemError(Exception):
    """Base class for molecule construction failures."""


class SmilesSyntaxError(ChemError):
    """Malformed token, unmatched parenthesis, or dangling ring closure."""


class ElementError(ChemError):
    """Element outside the supported vocabulary."""


class ValenceError(ChemError):
    """An atom's bonds exceed every allowed valence."""


class KekulizationError(ChemError):
    """An aromatic ring system admits no alternating bond assignment."""
