"""Walk through exact arithmetic in Z{X,Y} and its abelianization.

Run with: python3 demos/01_free_algebra_and_circular_words.py
"""

from ncwitt import Alphabet, FreePoly, abelianize, commutator, in_commutator_subgroup, sigma0

ab = Alphabet(["X", "Y"])
X = FreePoly.generator(ab, "X")
Y = FreePoly.generator(ab, "Y")

# Words multiply by concatenation, so the ring is non-commutative.
print("XY       =", X * Y)
print("YX       =", Y * X)
print("[X, Y]   =", commutator(X, Y))
print("(X+Y)^2  =", (X + Y) ** 2)

# The abelianization identifies words up to cyclic rotation.  A commutator
# always dies; inequivalent circular words stay apart.
square = commutator(X, Y) ** 2
print()
print("(XY-YX)^2            =", square)
print("its circular classes =", abelianize(square))
print("XYXY vs XXYY equal?  ", abelianize(X * Y * X * Y) == abelianize(X * X * Y * Y))

# Membership in [A,A] is decided by abelianizing.
print()
print("XY - YX in [A,A]?    ", in_commutator_subgroup(X * Y - Y * X))
print("XXYY - XYXY in [A,A]?", in_commutator_subgroup(X * X * Y * Y - X * Y * X * Y))

# sigma0 lifts a class back to its lexicographically least word.
alpha = abelianize(Y * X * X * Y)
print()
print("class of YXXY        =", alpha)
print("canonical lift       =", sigma0(alpha))
