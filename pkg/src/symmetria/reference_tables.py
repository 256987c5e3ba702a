"""Published small-n count tables, transcribed verbatim.

Each table maps n to its row together with the statistic value of the first
column.  Blank cells of the printed tables are omitted (rows end at the last
printed value); printed zeros are kept.
"""

# grand Dyck paths of semilength n by symmetric steps, k = 0..n
GRAND_DS = {
    1: [0, 2],
    2: [2, 0, 4],
    3: [4, 8, 0, 8],
    4: [14, 16, 24, 0, 16],
    5: [44, 64, 48, 64, 0, 32],
    6: [148, 208, 216, 128, 160, 0, 64],
}

# grand Dyck paths of semilength n by symmetric vertices, k = 1..n
GRAND_SV = {
    1: [2],
    2: [2, 4],
    3: [4, 8, 8],
    4: [10, 20, 24, 16],
    5: [28, 56, 72, 64, 32],
    6: [84, 168, 224, 224, 160, 64],
}

# partitions of semiperimeter n by degree of symmetry, k = 0..4
PARTITIONS_SP = {
    2: [0, 1, 0, 0, 0],
    3: [2, 0, 0, 0, 0],
    4: [2, 0, 2, 0, 0],
    5: [4, 4, 0, 0, 0],
    6: [6, 6, 0, 4, 0],
    7: [16, 8, 8, 0, 0],
    8: [24, 16, 16, 0, 8],
}

# Dyck paths of semilength n by symmetric steps, k = 1..n
DYCK_DS = {
    1: [1],
    2: [0, 2],
    3: [2, 0, 3],
    4: [2, 6, 0, 6],
    5: [8, 8, 16, 0, 10],
    6: [16, 32, 24, 40, 0, 20],
    7: [52, 84, 108, 60, 90, 0, 35],
}

# Dyck paths of semilength n by symmetric vertices, k = 1..n
DYCK_SV = {
    1: [1],
    2: [0, 2],
    3: [0, 2, 3],
    4: [0, 2, 6, 6],
    5: [0, 4, 12, 16, 10],
    6: [0, 8, 24, 40, 40, 20],
    7: [0, 20, 60, 104, 120, 90, 35],
}

# name -> (rows, first k, (class, statistic))
TABLES = {
    "grand_ds": (GRAND_DS, 0, ("grand_dyck", "ds")),
    "grand_sv": (GRAND_SV, 1, ("grand_dyck", "sv")),
    "partitions_psp": (PARTITIONS_SP, 0, ("partitions_sp", "ds")),
    "dyck_ds": (DYCK_DS, 1, ("dyck", "ds")),
    "dyck_sv": (DYCK_SV, 1, ("dyck", "sv")),
}


def as_counts(row: list[int], first_k: int) -> dict[int, int]:
    """Row as {k: count}, dropping zeros."""
    return {first_k + i: c for i, c in enumerate(row) if c}
