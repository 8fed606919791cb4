"""Two factorizations of 6 in Z[sqrt(-5)], and the ideal factorization that reconciles them."""
from dedekind_forge.quadratic import (QuadInt, elem_mul, elem_norm, fmt_elem, has_element_of_norm, ideal_factor,
                                      ideal_from_gens, ideal_mul, ideal_product, ring_of)

if __name__ == "__main__":
    r = ring_of(-5)
    print(r)
    for n in (2, 3):
        print(f"element of norm {n}: {has_element_of_norm(r, n)}")
    pairs = [(QuadInt(2), QuadInt(3)), (QuadInt(1, 1), QuadInt(1, -1))]
    for u, v in pairs:
        print(f"({fmt_elem(u)}) * ({fmt_elem(v)}) = {fmt_elem(elem_mul(r, u, v))}  "
              f"norms {elem_norm(r, u)} * {elem_norm(r, v)}")
    six = ideal_from_gens(r, [6])
    fac = ideal_factor(six)
    print("(6) = " + " * ".join(f"{P}^{k}" if k > 1 else str(P) for P, k in fac))
    p2, p3, p3b = (P for P, _ in fac)
    for name, I in (("p2^2", ideal_mul(p2, p2)), ("p3*p3b", ideal_mul(p3, p3b)),
                    ("p2*p3", ideal_mul(p2, p3)), ("p2*p3b", ideal_mul(p2, p3b))):
        print(f"{name:7} = {I}  norm {I.norm}")
    print("reconstructs:", ideal_product(r, fac) == six)
