"""Golden values for the concrete games.

[PAPER]-tagged constants were transcribed from the published tables and
verified against independent numerical oracles (mpmath polyroots /
findroot, sympy) in scripts/check_oracles.py.  [DERIVED] constants were
produced by this package once and pinned after oracle verification.
"""

from gmpy2 import mpq


def _q(s):
    return mpq(s)


# --- G3 ---------------------------------------------------------------

# [PAPER] deviation table: profile -> strictly improving players.
G3_DEVIATIONS = {
    (0, 0, 0): {2}, (0, 0, 1): {3}, (0, 1, 0): {1, 3}, (0, 1, 1): {1},
    (1, 0, 0): {2, 3}, (1, 0, 1): {1}, (1, 1, 0): {3}, (1, 1, 1): {2},
}

# [PAPER] advantage polynomials, variables x1,x2,x3.
G3_F = [
    "-x2*x3 + 2*x2 - 1",
    "x1*x3 - x1 - 2*x3 + 1",
    "3*x1*x2 - 1",
]

# [PAPER] minimal polynomials, descending coefficients.
G3_P = [
    [3, -7, 3],
    [9, -7, 1],
    [1, 3, -1],
]

# [PAPER] radical closed forms p + q*sqrt(13).
G3_RADICALS = [
    (_q("7/6"), _q("-1/6"), 13),
    (_q("7/18"), _q("1/18"), 13),
    (_q("-3/2"), _q("1/2"), 13),
]


# --- G4 ---------------------------------------------------------------

# [PAPER, corrected] deviation table.  The printed row (0,0,0,1) lists
# only player 2, but player 4 also gains strictly (payoff 0 -> 1, checked
# by brute force); the nonemptiness claim behind the table is unaffected.
G4_DEVIATIONS = {
    (0, 0, 0, 0): {3}, (0, 0, 0, 1): {2, 4}, (0, 0, 1, 0): {1},
    (0, 0, 1, 1): {1}, (0, 1, 0, 0): {1, 3}, (0, 1, 0, 1): {4},
    (0, 1, 1, 0): {4}, (0, 1, 1, 1): {2}, (1, 0, 0, 0): {2, 3, 4},
    (1, 0, 0, 1): {1}, (1, 0, 1, 0): {2}, (1, 0, 1, 1): {3},
    (1, 1, 0, 0): {3, 4}, (1, 1, 0, 1): {1, 2}, (1, 1, 1, 0): {1, 4},
    (1, 1, 1, 1): {1, 3},
}

# [PAPER] advantage polynomials, variables x1..x4.
G4_F = [
    "x2*x3*x4 + 2*x2*x3 - 2*x2 - 2*x3*x4 + 1",
    "3*x1*x3*x4 - 3*x1*x3 + x1 - x3*x4 + x3 - x4",
    "x1*x4 - x1 - 2*x4 + 1",
    "-x1*x2*x3 + 3*x1*x3 - x2*x3 + x2 - 1",
]

# [PAPER] reduced lex basis for x1 > x2 > x3 > x4, integer-cleared;
# per generator, descending coefficient rows keyed by the leading var.
G4_LEX_BASIS = [
    # g1 in x4 alone
    {"x4^": [5, -44, 143, -163, 85, -21, 2]},
    # g2 = 28*x3 + h(x4)
    {"x3": 28, "x4^": [-1465, 12302, -36947, 32897, -11699, 1447]},
    # g3 = 4*x2 + h(x4)
    {"x2": 4, "x4^": [255, -2094, 6053, -4687, 1401, -149]},
    # g4 = 7*x1 + h(x4)
    {"x1": 7, "x4^": [5, -39, 104, -59, 26, -9]},
]

# [PAPER] minimal polynomials of x1..x4, descending coefficients.
G4_P = [
    [7, -42, 89, -83, 40, -10, 1],
    [4, -27, 70, -79, 45, -13, 1],
    [140, -511, 701, -454, 141, -19, 1],
    [5, -44, 143, -163, 85, -21, 2],
]

# [PAPER] Murty data: (witness, value, H as a string).
G4_MURTY = [
    (18, 167595301, "89/7"),
    (28, 1504207909, "79/4"),
    (11, 175397399, "701/140"),
    (39, 13945135583, "163/5"),
]

# [DERIVED] pinned witness primes of the S_6 certificates for P_1..P_4:
# (prime with (5,1) pattern, prime with (2,1,1,1,1) pattern).
G4_S6_WITNESSES = [(2, 131), (5, 131), (17, 131), (2, 131)]

# [DERIVED] same for x^5 - x - 1 (the classical S_5 example).
X5_S5_WITNESSES = (23, 163)

# [PAPER] 12-digit decimals as printed in the proposition statement.
G4_DECIMALS_CLAIMED = [
    "0.529270752820", "0.846414728986", "0.523440476515", "0.320065197645",
]

# [DERIVED] 12-digit round-half-even decimals of the exact coordinates
# (oracle: mpmath polyroots at 60 digits; x2 and x4 end ...980794...
# and ...644279..., so the claimed strings above round two of them up).
G4_DECIMALS_EXACT = [
    "0.529270752820", "0.846414728981", "0.523440476515", "0.320065197644",
]


# --- Appendix-style Sturm goldens for g1 = G4_P[3] --------------------

# [PAPER] the full negated-remainder chain, descending coefficients.
G4_STURM_CHAIN = [
    ["5", "-44", "143", "-163", "85", "-21", "2"],
    ["30", "-220", "572", "-489", "170", "-21"],
    ["55/9", "-5249/90", "943/15", "-433/18", "47/15"],
    ["-27110403/30250", "15927363/15125", "-2514591/6050", "831852/15125"],
    ["4813052861375/81663772313601", "-1017283844500/27221257437867",
     "417696219875/81663772313601"],
    ["46666740312733677523326/1531601841083641320125",
     "-19799411241381912287163/1531601841083641320125"],
    ["3506083202136869448018665125/26667695965024814331677001308676"],
]

# [PAPER] chain values at 3/10, 4/10, 5/10 (p0..p6 per point).
_P6 = "3506083202136869448018665125/26667695965024814331677001308676"
G4_STURM_EVALS = {
    "3/10": ["161/40000", "-2751/10000", "371/7500", "26761959/30250000",
             "-258737930605/326655089254404",
             "-28996945737809045150826/7658009205418206600625", _P6],
    "4/10": ["-4/3125", "27/625", "-4/625", "-236727/1890625",
             "-32955935705/81663772313601",
             "-5663575581442206389163/7658009205418206600625", _P6],
    "5/10": ["1/64", "7/16", "-31/360", "-383139/242000",
             "380134673875/326655089254404",
             "28271671319879411796/12252814728669130561", _P6],
}

# [PAPER] sign-change counts.
G4_STURM_V = {"-inf": 4, "3/10": 4, "4/10": 3, "5/10": 2, "inf": 2}


# --- G5 ---------------------------------------------------------------

# [PAPER] deviation table.
G5_DEVIATIONS = {
    (0, 0, 0, 0, 0): {4}, (0, 0, 0, 0, 1): {3, 5}, (0, 0, 0, 1, 0): {2},
    (0, 0, 0, 1, 1): {1, 2}, (0, 0, 1, 0, 0): {2, 4}, (0, 0, 1, 0, 1): {1, 5},
    (0, 0, 1, 1, 0): {5}, (0, 0, 1, 1, 1): {3}, (0, 1, 0, 0, 0): {3, 4, 5},
    (0, 1, 0, 0, 1): {1, 2}, (0, 1, 0, 1, 0): {3}, (0, 1, 0, 1, 1): {1, 4},
    (0, 1, 1, 0, 0): {4, 5}, (0, 1, 1, 0, 1): {2}, (0, 1, 1, 1, 0): {2},
    (0, 1, 1, 1, 1): {1, 2}, (1, 0, 0, 0, 0): {1, 4}, (1, 0, 0, 0, 1): {1, 3, 5},
    (1, 0, 0, 1, 0): {1, 2}, (1, 0, 0, 1, 1): {2, 4}, (1, 0, 1, 0, 0): {1, 2, 4},
    (1, 0, 1, 0, 1): {5}, (1, 0, 1, 1, 0): {5}, (1, 0, 1, 1, 1): {3},
    (1, 1, 0, 0, 0): {1, 3, 4, 5}, (1, 1, 0, 0, 1): {2}, (1, 1, 0, 1, 0): {1, 3},
    (1, 1, 0, 1, 1): {4}, (1, 1, 1, 0, 0): {1, 4, 5}, (1, 1, 1, 0, 1): {2, 3},
    (1, 1, 1, 1, 0): {1, 2, 5}, (1, 1, 1, 1, 1): {2, 4},
}

# [PAPER] advantage polynomials, variables x1..x5.
G5_F = [
    "-5*x2*x3*x4*x5 + 4*x2*x3*x4 + 2*x2*x3*x5 - x2*x3 + 3*x2*x4*x5"
    " - 2*x2*x4 - 2*x2*x5 + x2 + x3*x4*x5 - x3*x4 - x4*x5 + x4 + 2*x5 - 1",
    "x3*x4*x5 + 2*x3*x4 - 2*x3 - 2*x4*x5 + 1",
    "-2*x1*x2*x4*x5 + x1*x2*x4 + x1*x2*x5 + 2*x1*x4*x5 - x1*x4 - x1*x5"
    " + 3*x2*x4*x5 - 3*x2*x4 + x2 - x4*x5 + x4 - x5",
    "2*x1*x2*x3*x5 - 2*x1*x2*x3 - x1*x2*x5 + x1*x2 - x1*x3*x5 + x1*x3"
    " + x1*x5 - x1 - x2*x3*x5 + x2*x3 + x2*x5 - x2 - 2*x5 + 1",
    "-x1*x2*x3*x4 + x1*x2*x3 + x1*x2*x4 - x1*x2 + x1*x3*x4 - x1*x3"
    " - x1*x4 + x1 - x2*x3*x4 + 3*x2*x4 - x3*x4 + x3 - 1",
]

# [PAPER] minimal polynomials of x1..x5, descending coefficients.
G5_P = [
    [576, 7360, 4496, 250816, 355564, -7898280, 7658244, 75548910,
     -142993432, -189077220, 334832314, 474658874, 1696776519,
     -7562033350, 1512397109, 14656660866, -10470778075, -3782764895,
     -665928467, 10050992181, -5447529632, -1586217407, 562969676,
     1493433257, -79516172, -522298360, 132583232],
    [2057728, -47527232, 374368064, -482543600, -11253727536,
     90191808584, -352161035060, 829456047656, -1120735934348,
     286387243298, 2393470340090, -6252418753985, 9238553888534,
     -9587641717941, 7391393209142, -4277517478697, 1815337752171,
     -515212602860, 59595129244, 25514336227, -17322169528, 5510430025,
     -1139164516, 160112123, -14874613, 828146, -20988],
    [5828, -80590, 471147, -1473516, 1995893, 3280961, -21791522,
     51425278, -93080861, 203283288, -444991348, 713613468, -837466118,
     925602099, -1210417319, 1552957912, -1585613560, 1241271492,
     -772369636, 401799920, -180281904, 69151344, -21721184, 5260240,
     -909264, 99200, -5120],
    [367535904, -4069658144, 15863607440, 4840925000, -332049318712,
     1798491222250, -5880537317282, 13925726681306, -25570689763592,
     37716767814324, -45641117387319, 45922091951685, -38746001553780,
     27551639828330, -16547091697878, 8389403526528, -3578413101941,
     1274916123621, -374578292008, 88741617902, -16260708632,
     2104604912, -141853168, -7308320, 2769472, -256128, 8192],
    [25772032, -399987456, 2634374272, -8416506944, 2215910496,
     110722637568, -612619393968, 2025933659884, -4916502391844,
     9383743371458, -14566831934444, 18743281388994, -20217905397986,
     18405783324440, -14192403999687, 9280251573089, -5141465321619,
     2406410117193, -946553896669, 310404824295, -83872244335,
     18358684229, -3175419088, 417903630, -39340244, 2360724, -67892],
]

# [PAPER] 10-digit decimals from the proposition statement.
G5_DECIMALS = [
    "0.3503704221", "0.6465164785", "0.6487118183",
    "0.3717487703", "0.3680616872",
]

# [PAPER] boundary cases for player 1: 12-digit decimals for x2..x5 as
# printed, plus the sign of f1 at the partial NE.
G5_CASE1_CLAIMED = [
    "0.650518016106", "0.638238319763", "0.402794248582", "0.433321011106",
]
G5_CASE1_F1_SIGN = 1
G5_CASE2 = [
    "0.589697169563", "0.681923203912", "0.338247172171", "0.218624870529",
]
G5_CASE2_F1_SIGN = -1

# [DERIVED] round-half-even 12-digit values for Case 1 (oracle: mpmath
# at 60 digits; x2 ends ...016105310, x3 ends ...319762459, so the
# claimed strings round both up).
G5_CASE1_EXACT = [
    "0.650518016105", "0.638238319762", "0.402794248582", "0.433321011106",
]
