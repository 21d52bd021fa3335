"""Published values used by the acceptance and unit tests."""

# Rows of the B6 and C6 tables of the dimension-75 case study:
# partition, weighted diagram, Dynkin index, quite even.
B6_ROWS = [
    ("[5^2,1^3]", (0, 2, 0, 2, 0, 0), 20, True),
    ("[5,4^2]", (1, 0, 1, 1, 0, 1), 20, False),
    ("[5,3,1^5]", (2, 0, 2, 0, 0, 0), 12, True),
    ("[5,2^4]", (2, 1, 0, 0, 0, 1), 12, False),
    ("[4^2,3,1^2]", (0, 1, 1, 0, 1, 0), 12, False),
    ("[5,2^2,1^4]", (2, 1, 0, 1, 0, 0), 11, False),
    ("[4^2,2^2,1]", (0, 2, 0, 0, 0, 1), 11, False),
    ("[5,1^8]", (2, 2, 0, 0, 0, 0), 10, False),
    ("[4^2,1^5]", (0, 2, 0, 1, 0, 0), 10, False),
    ("[3^2,1^7]", (0, 2, 0, 0, 0, 0), 4, True),
    ("[3,2^4,1^2]", (1, 0, 0, 0, 1, 0), 4, False),
    ("[3,2^2,1^6]", (1, 0, 1, 0, 0, 0), 3, False),
    ("[2^6,1]", (0, 0, 0, 0, 0, 1), 3, False),
    ("[3,1^10]", (2, 0, 0, 0, 0, 0), 2, False),
    ("[2^4,1^5]", (0, 0, 0, 1, 0, 0), 2, False),
]

C6_ROWS = [
    ("[4,2,1^6]", (2, 0, 1, 0, 0, 0), 11, False),
    ("[3^2,2^3]", (0, 1, 0, 0, 1, 0), 11, False),
    ("[4,1^8]", (2, 1, 0, 0, 0, 0), 10, False),
    ("[3^2,2^2,1^2]", (0, 1, 0, 1, 0, 0), 10, False),
]

# B6 reduced ideals: partition, index, prime (None = no separating prime), exponent.
IU_ROWS = [
    ("[5,2^4]", 12, 3, 3),
    ("[4^2,3,1^2]", 12, 3, 2),
    ("[5,2^2,1^4]", 11, None, None),
    ("[4^2,2^2,1]", 11, None, None),
    ("[5,1^8]", 10, 2, 2),
    ("[4^2,1^5]", 10, 2, 4),
    ("[3,2^2,1^6]", 3, 3, 2),
    ("[2^6,1]", 3, 3, 3),
    ("[3,1^10]", 2, 2, 2),
    ("[2^4,1^5]", 2, 2, 4),
]

UNDETERMINED_75 = {
    frozenset({"B6 [5,2^2,1^4]", "B6 [4^2,2^2,1]"}),
    frozenset({"C6 [4,2,1^6]", "C6 [3^2,2^3]"}),
    frozenset({"C6 [4,1^8]", "C6 [3^2,2^2,1^2]"}),
}

E7_QUITE_EVEN = ["A2", "2A2", "D4(a1)", "D4", "A4+A2", "E6(a3)", "D5", "A6", "E6(a1)", "E6"]
# as printed, including the repeated (A3+A1)''
E7_EVEN_NOT_QUITE_EVEN = [
    "(3A1)''", "A2+3A1", "(A3+A1)''", "A3+A2+A1", "(A3+A1)''", "(A5)''",
    "D5(a1)+A1", "E7(a5)", "E7(a4)", "E7(a3)", "E7(a2)", "E7(a1)", "E7",
]

D4_PARTITIONS = ["[2^2,1^4]", "[3,1^5]", "[3^2,1^2]", "[3,2^2,1]", "[5,1^3]", "[5,3]"]
D4_INDICES_QUOTED = [1, 2, 4, 4, 10, 14]
