"""Oracle values frozen from brute-force enumeration.

COLLAPSE: dominance-maximum of the X-partitions below p, for every p of total 6..8.
DCOM: maximum over column splits, for every p of total 6 and z in 2..3.
G2_DUAL: the G2 map for n_kappa 1..10, from the pipeline when it was first validated.
"""

COLLAPSE = {
    ('B', '1,1,1,1,1,1,1'): '1,1,1,1,1,1,1',
    ('B', '2,1,1,1,1,1'): '1,1,1,1,1,1,1',
    ('B', '2,2,1,1,1'): '2,2,1,1,1',
    ('B', '2,2,2,1'): '2,2,1,1,1',
    ('B', '3,1,1,1,1'): '3,1,1,1,1',
    ('B', '3,2,1,1'): '3,1,1,1,1',
    ('B', '3,2,2'): '3,2,2',
    ('B', '3,3,1'): '3,3,1',
    ('B', '4,1,1,1'): '3,1,1,1,1',
    ('B', '4,2,1'): '3,3,1',
    ('B', '4,3'): '3,3,1',
    ('B', '5,1,1'): '5,1,1',
    ('B', '5,2'): '5,1,1',
    ('B', '6,1'): '5,1,1',
    ('B', '7'): '7',
    ('C', '1,1,1,1,1,1'): '1,1,1,1,1,1',
    ('C', '1,1,1,1,1,1,1,1'): '1,1,1,1,1,1,1,1',
    ('C', '2,1,1,1,1'): '2,1,1,1,1',
    ('C', '2,1,1,1,1,1,1'): '2,1,1,1,1,1,1',
    ('C', '2,2,1,1'): '2,2,1,1',
    ('C', '2,2,1,1,1,1'): '2,2,1,1,1,1',
    ('C', '2,2,2'): '2,2,2',
    ('C', '2,2,2,1,1'): '2,2,2,1,1',
    ('C', '2,2,2,2'): '2,2,2,2',
    ('C', '3,1,1,1'): '2,2,1,1',
    ('C', '3,1,1,1,1,1'): '2,2,1,1,1,1',
    ('C', '3,2,1'): '2,2,2',
    ('C', '3,2,1,1,1'): '2,2,2,1,1',
    ('C', '3,2,2,1'): '2,2,2,2',
    ('C', '3,3'): '3,3',
    ('C', '3,3,1,1'): '3,3,1,1',
    ('C', '3,3,2'): '3,3,2',
    ('C', '4,1,1'): '4,1,1',
    ('C', '4,1,1,1,1'): '4,1,1,1,1',
    ('C', '4,2'): '4,2',
    ('C', '4,2,1,1'): '4,2,1,1',
    ('C', '4,2,2'): '4,2,2',
    ('C', '4,3,1'): '4,2,2',
    ('C', '4,4'): '4,4',
    ('C', '5,1'): '4,2',
    ('C', '5,1,1,1'): '4,2,1,1',
    ('C', '5,2,1'): '4,2,2',
    ('C', '5,3'): '4,4',
    ('C', '6'): '6',
    ('C', '6,1,1'): '6,1,1',
    ('C', '6,2'): '6,2',
    ('C', '7,1'): '6,2',
    ('C', '8'): '8',
    ('D', '1,1,1,1,1,1'): '1,1,1,1,1,1',
    ('D', '1,1,1,1,1,1,1,1'): '1,1,1,1,1,1,1,1',
    ('D', '2,1,1,1,1'): '1,1,1,1,1,1',
    ('D', '2,1,1,1,1,1,1'): '1,1,1,1,1,1,1,1',
    ('D', '2,2,1,1'): '2,2,1,1',
    ('D', '2,2,1,1,1,1'): '2,2,1,1,1,1',
    ('D', '2,2,2'): '2,2,1,1',
    ('D', '2,2,2,1,1'): '2,2,1,1,1,1',
    ('D', '2,2,2,2'): '2,2,2,2',
    ('D', '3,1,1,1'): '3,1,1,1',
    ('D', '3,1,1,1,1,1'): '3,1,1,1,1,1',
    ('D', '3,2,1'): '3,1,1,1',
    ('D', '3,2,1,1,1'): '3,1,1,1,1,1',
    ('D', '3,2,2,1'): '3,2,2,1',
    ('D', '3,3'): '3,3',
    ('D', '3,3,1,1'): '3,3,1,1',
    ('D', '3,3,2'): '3,3,1,1',
    ('D', '4,1,1'): '3,1,1,1',
    ('D', '4,1,1,1,1'): '3,1,1,1,1,1',
    ('D', '4,2'): '3,3',
    ('D', '4,2,1,1'): '3,3,1,1',
    ('D', '4,2,2'): '3,3,1,1',
    ('D', '4,3,1'): '3,3,1,1',
    ('D', '4,4'): '4,4',
    ('D', '5,1'): '5,1',
    ('D', '5,1,1,1'): '5,1,1,1',
    ('D', '5,2,1'): '5,1,1,1',
    ('D', '5,3'): '5,3',
    ('D', '6'): '5,1',
    ('D', '6,1,1'): '5,1,1,1',
    ('D', '6,2'): '5,3',
    ('D', '7,1'): '7,1',
    ('D', '8'): '7,1',
}

DCOM = {
    ('6', 2): '2,2,2',
    ('5,1', 2): '3,2,1',
    ('4,2', 2): '4,2',
    ('4,1,1', 2): '4,2',
    ('3,3', 2): '4,2',
    ('3,2,1', 2): '5,1',
    ('3,1,1,1', 2): '5,1',
    ('2,2,2', 2): '6',
    ('2,2,1,1', 2): '6',
    ('2,1,1,1,1', 2): '6',
    ('1,1,1,1,1,1', 2): '6',
    ('6', 3): '3,3',
    ('5,1', 3): '4,2',
    ('4,2', 3): '5,1',
    ('4,1,1', 3): '5,1',
    ('3,3', 3): '6',
    ('3,2,1', 3): '6',
    ('3,1,1,1', 3): '6',
    ('2,2,2', 3): '6',
    ('2,2,1,1', 3): '6',
    ('2,1,1,1,1', 3): '6',
    ('1,1,1,1,1,1', 3): '6',
}

G2_DUAL = {
    1: ('G2', 'G2a1', 'G2a1', 'G2a1', '0'),
    2: ('G2', 'G2', 'G2', 'G2a1', 'At1'),
    3: ('G2', 'G2', 'G2a1', 'G2a1', 'A1'),
    4: ('G2', 'G2', 'G2', 'G2', 'G2a1'),
    5: ('G2', 'G2', 'G2', 'G2', 'G2a1'),
    6: ('G2', 'G2', 'G2', 'G2', 'G2a1'),
    7: ('G2', 'G2', 'G2', 'G2', 'G2'),
    8: ('G2', 'G2', 'G2', 'G2', 'G2'),
    9: ('G2', 'G2', 'G2', 'G2', 'G2a1'),
    10: ('G2', 'G2', 'G2', 'G2', 'G2'),
}
