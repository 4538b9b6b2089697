"""Frozen expected values used across the test suite.

NK_TABLE holds the published breakdown points N(k) of the k-Goebel
sequences (start value 2) for 2 <= k <= 359; the k-column of OEIS A108394
begins the same way.  JP_TABLE holds the block decomposition
(l_L, l_R, #J_p) for the 32 smallest primes p = 1 (mod 4), p >= 13.
Both were cross-checked against independently published data before being
frozen here; the suite treats them as ground truth.
"""

_NK_ROWS = {
    0: [None, None, 43, 89, 97, 214, 19, 239, 37, 79, 83, 239, 31, 431, 19, 79, 23, 827],
    18: [43, 173, 31, 103, 94, 73, 19, 243, 141, 101, 53, 811, 47, 1077, 19, 251, 29, 311],
    36: [134, 71, 23, 86, 43, 47, 19, 419, 31, 191, 83, 337, 59, 1559, 19, 127, 109, 163],
    54: [67, 353, 83, 191, 83, 107, 19, 503, 29, 191, 47, 83, 51, 1907, 19, 131, 37, 137],
    72: [31, 214, 31, 127, 47, 443, 19, 173, 31, 227, 23, 337, 83, 563, 19, 47, 166, 487],
    90: [29, 89, 83, 79, 137, 73, 19, 2039, 62, 218, 59, 127, 31, 81, 19, 239, 37, 71],
    108: [46, 167, 31, 457, 101, 179, 19, 173, 37, 179, 29, 191, 67, 563, 19, 86, 43, 151],
    126: [23, 101, 43, 81, 59, 139, 19, 47, 31, 249, 46, 101, 83, 647, 19, 179, 25, 103],
    144: [43, 486, 29, 83, 23, 167, 19, 167, 37, 331, 53, 167, 47, 167, 19, 25, 59, 326],
    162: [31, 191, 31, 79, 43, 73, 19, 479, 23, 79, 47, 359, 29, 359, 19, 71, 37, 47],
    180: [97, 839, 61, 431, 46, 227, 19, 827, 37, 241, 159, 118, 23, 167, 19, 103, 97, 179],
    198: [47, 131, 31, 127, 29, 254, 19, 251, 46, 137, 43, 331, 79, 479, 19, 239, 23, 163],
    216: [47, 214, 47, 347, 83, 307, 19, 251, 31, 47, 173, 101, 43, 83, 19, 229, 173, 751],
    234: [113, 191, 23, 101, 53, 73, 19, 1149, 61, 79, 47, 103, 59, 71, 19, 79, 37, 173],
    252: [31, 191, 31, 251, 83, 201, 19, 233, 31, 499, 47, 313, 47, 359, 19, 89, 46, 139],
    270: [43, 47, 46, 151, 59, 151, 19, 863, 25, 223, 23, 614, 31, 191, 19, 163, 29, 173],
    288: [53, 431, 31, 81, 43, 311, 19, 179, 37, 103, 101, 129, 113, 1559, 19, 127, 59, 331],
    306: [34, 227, 47, 179, 47, 73, 19, 227, 29, 158, 47, 47, 46, 179, 19, 79, 37, 167],
    324: [23, 491, 109, 79, 141, 131, 19, 479, 37, 86, 43, 193, 47, 101, 19, 223, 47, 129],
    342: [29, 137, 31, 311, 23, 103, 19, 563, 31, 169, 47, 127, 34, 89, 19, 337, 37, 167],
}

# k -> N(k) for 2 <= k <= 359 (k = 0, 1 give constant sequences, no breakdown)
NK_TABLE = {
    base + col: value
    for base, row in _NK_ROWS.items()
    for col, value in enumerate(row)
    if value is not None
}

# running-maximum records of N(k) within k <= 359
NK_RECORDS = [(2, 43), (3, 89), (4, 97), (5, 214), (7, 239), (13, 431),
              (17, 827), (31, 1077), (49, 1559), (67, 1907), (97, 2039)]

# p -> (size of middle block, l_L, l_R) for the 32 smallest p = 1 (mod 4), p >= 13
JP_TABLE = {
    13: (3, 4, 10), 17: (3, 8, 14), 29: (8, 12, 28), 37: (12, 10, 34),
    41: (14, 8, 36), 53: (21, 10, 52), 61: (22, 12, 56), 73: (27, 16, 70),
    89: (38, 8, 84), 97: (43, 8, 94), 101: (42, 4, 88), 109: (45, 12, 102),
    113: (41, 30, 112), 137: (60, 8, 128), 149: (64, 20, 148), 157: (63, 4, 130),
    173: (80, 4, 164), 181: (78, 14, 170), 193: (85, 6, 176), 197: (91, 14, 196),
    229: (103, 12, 218), 233: (102, 14, 218), 241: (106, 24, 236), 257: (119, 8, 246),
    269: (122, 16, 260), 277: (114, 22, 250), 281: (116, 16, 248), 293: (127, 30, 284),
    313: (136, 2, 274), 317: (149, 10, 308), 337: (161, 6, 328), 349: (162, 20, 344),
}

# primes p <= 10^4 with 2 in the middle block (walk from l = 2 ends mid-board)
TWO_IN_JP_BELOW_1E4 = [313, 1873, 2081, 2089, 2377, 4481, 5281, 6361, 6961,
                       7681, 8161, 8209, 8521, 8929, 9001]

# golden billiard data for (p, l) = (37, 12)
SIGMA_37_12 = [13, 2, 9, 17, 6, 5, 16, 10, 1, 12, 14, 3, 8, 18, 7, 4, 15, 11]
A_37_12_FIRST_HALF = [1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -1, 1, 1, -1, -1, 1]

# golden periodic skeleton values
B_2_0 = [1, -1, 1]
B_8_2 = [1, 1, 1, 1, -1, -1, -1, -1, -1]

# regression constants frozen from the first full runs (these are the
# oracle for later runs, not derived from anything else)
SIEVE_1E5_P2000_SURVIVORS = 341
SIEVE_1E5_P2000_FIRST = [97, 997, 1141, 1441, 1633, 1933, 2701, 2809, 3325, 3421]
NK_TABLE_PRIME_SHARE = (314, 358, "0.877095")
