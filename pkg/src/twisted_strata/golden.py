"""Embedded table data for the twisted groups of type 2E6 and 3D4.

``ROWS`` is the structured form: one (stratum, box, entries) triple per row,
rows and entries in published order.  ``TEX_SOURCE`` keeps the TeX lines of
the published tables verbatim; ``tables_io.normalize_tex_row`` turns them
into the ASCII text layout so the two can be compared.

The two d=0 cuspidals of E6 are interchangeable; ``#1`` / ``#2`` is an
arbitrary numbering.
"""

TABLE_VERSION = "1"

ROWS = {
    "2E6": (
        ("1_24", "1", ("1_24",)),
        ("2''_16", "1", ("2''_16",)),
        ("4_13", "C2", ("4_13", "2'_16")),
        ("1''_12", "1", ("1''_12",)),
        ("9_10", "1", ("9_10",)),
        ("8'_9", "1", ("8'_9",)),
        ("8''_9", "1", ("8''_9",)),
        ("4''_7", "1", ("4''_7",)),
        ("6'_6", "1", ("6'_6",)),
        ("9''_6", "C2", ("9''_6", "4_8")),
        ("16_5", "C2", ("16_5", "4'_7")),
        ("12_4", "S4", ("12_4", "6''_6", "1'_12", "9'_6", "(E6,1,4)")),
        ("8'_3", "C2", ("8'_3", "(A5,eps,0)")),
        ("8''_3", "C2", ("8''_3", "2''_4")),
        ("9_2", "1", ("9_2",)),
        ("4_1", "C2", ("4_1", "2'_4")),
        ("1_0", "C2", ("1_0", "(A5,1,0)", "(E6,1,0)#1", "(E6,1,0)#2")),
    ),
    "3D4": (
        ("1_6", "1", ("1_6",)),
        ("1''_3", "1", ("1''_3",)),
        ("2_2", "1", ("2_2",)),
        ("2_1", "S3", ("2_1", "1'_3", "(D4,1,1)")),
        ("1_0", "1", ("1_0", "(D4,1,0)")),
    ),
}

TEX_SOURCE = {
    "2E6": r"""
$1_{24}$.....$\bx{1}$
$2''_{16}$.....$\bx{1}$
$4_{13}, 2'_{16}$.....$\bx{\cc_2}$
$1''_{12}$.....$\bx{1}$
$9_{10}$.....$\bx{1}$
$8'_9$.....$\bx{1}$
$8''_9$.....$\bx{1}$
$4''_7$.....$\bx{1}$
$6'_6$ .....$\bx{1}$
$9''_6,4_8$ .....$\bx{\cc_2}$
$16_5,4'_7$ .....$\bx{\cc_2}$
$12_4,6''_6,1'_{12},9'_6,(E_6,1,4)$......$\bx{S_4}$
$8'_3,(A_5,\e,0)$ .....$\bx{\cc_2}$
$8''_3,2''_4$ .....$\bx{\cc_2}$
$9_2$ .....$\bx{1}$
$4_1,2'_4$  .....$\bx{\cc_2}$
$1_0,(A_5,1,0),(E_6,1,0)_{\sha=2}$......$\bx{\cc_2}$
""",
    "3D4": r"""
$1_6$ .....$\bx{1}$
$1''_3$.....$\bx{1}$
$2_2$.....$\bx{1}$
$2_1,1'_3,(D_4,1,1)$....$\bx{S_3}$
$1_0,(D_4,1,0)$....$\bx{1}$
""",
}

# sha256 of the canonical JSON document of each table (tables_io.table_checksum)
CHECKSUMS = {
    "2E6": "edf863261d8d993103ece6eb6c7d85a413570663a020fc83cf85c7714f0f28ec",
    "3D4": "9f140bee4cd9defdbc2e2c0ece75ea47a34cf5a9cce24e866a3d089cf1af90b3",
}
