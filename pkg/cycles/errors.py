# Kodaira
#
# Copyright © 2021 The Kodaira authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

class KodairaError(Exception):
    """Base class for every domain error raised by the library."""


class ContractibleLoop(KodairaError):
    """The walk reduces to the empty word."""


class NotComposable(KodairaError):
    """Two consecutive letters of a walk do not share a vertex of the ribbon graph."""


class NotMonotone(KodairaError):
    """A walk expected to be in CVb form contains an inverse ε letter (or no ε letter at all)."""


class NotSimple(KodairaError):
    """A loop expected to be simple has self-intersections."""


class HomotopicInputs(KodairaError):
    """Two loops that should be distinct are freely homotopic."""


class NotCoprime(KodairaError):
    """Rank and total degree are not coprime."""


class SearchTooLarge(KodairaError):
    """An exhaustive enumeration was requested above its configured bounds."""


class NotChainMap(KodairaError):
    """A map of complexes does not commute with the differentials."""


class NotMinimal(KodairaError):
    """A complex still has a differential entry which is a multiple of an idempotent."""


class NotSimpleTwistCurve(KodairaError):
    """A Dehn twist was requested along a loop which is not simple."""


class NotSpherical(KodairaError):
    """A loop is not a simple non-separating primitive loop."""


class NotPeelable(KodairaError):
    """Extension peeling was requested on a sequence of rank one."""


class UnsupportedLoop(KodairaError):
    """No projective complex is constructed for this kind of walk."""


class NormalizationStuck(KodairaError):
    """No sequence of twists carrying a spherical loop to γ_Pic was found within the search bounds."""


class InputError(Exception):
    """Malformed command-line input: unreadable file or JSON of the wrong shape."""


