from gelfand_hille.jordan import jordan_block
from gelfand_hille.matrix import Matrix, Vector, unit_vector


def J(size, eigenvalue=1):
    return jordan_block(size, eigenvalue)


def e(n, j):
    return unit_vector(n, j)


def M(rows):
    return Matrix(rows)


def V(entries):
    return Vector(entries)
