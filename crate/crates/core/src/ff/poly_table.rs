// @generated by tools/gen_poly_table.py; do not edit by hand.
//
// (p, k, [c_0, ..., c_{k-1}]) for the monic primitive polynomial
// x^k + c_{k-1} x^{k-1} + ... + c_0 over GF(p).

pub(crate) static REDUCTION_POLYS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 14, &[1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 18, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 20, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 21, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 22, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 23, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 24, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 2, &[2, 1]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 1, 0, 0]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (3, 6, &[2, 1, 0, 0, 0, 0]),
    (3, 7, &[1, 2, 1, 0, 0, 0, 0]),
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0]),
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0]),
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (3, 11, &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 12, &[2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 14, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, 15, &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 2, &[2, 1]),
    (5, 3, &[2, 3, 0]),
    (5, 4, &[2, 2, 1, 0]),
    (5, 5, &[2, 4, 0, 0, 0]),
    (5, 6, &[2, 1, 0, 0, 0, 0]),
    (5, 7, &[2, 3, 0, 0, 0, 0, 0]),
    (5, 8, &[3, 2, 1, 0, 0, 0, 0, 0]),
    (5, 9, &[3, 2, 1, 0, 0, 0, 0, 0, 0]),
    (5, 10, &[3, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (7, 2, &[3, 1]),
    (7, 3, &[2, 3, 0]),
    (7, 4, &[5, 3, 1, 0]),
    (7, 5, &[4, 1, 0, 0, 0]),
    (7, 6, &[5, 1, 3, 0, 0, 0]),
    (7, 7, &[2, 6, 0, 0, 0, 0, 0]),
    (7, 8, &[3, 1, 0, 0, 0, 0, 0, 0]),
    (11, 2, &[7, 1]),
    (11, 3, &[4, 1, 0]),
    (11, 4, &[2, 1, 0, 0]),
    (11, 5, &[4, 1, 1, 0, 0]),
    (11, 6, &[8, 2, 1, 0, 0, 0]),
    (13, 2, &[2, 1]),
    (13, 3, &[6, 1, 0]),
    (13, 4, &[2, 1, 1, 0]),
    (13, 5, &[2, 4, 0, 0, 0]),
    (13, 6, &[2, 2, 1, 0, 0, 0]),
    (17, 2, &[3, 1]),
    (17, 3, &[3, 1, 0]),
    (17, 4, &[11, 1, 0, 0]),
    (17, 5, &[3, 1, 0, 0, 0]),
    (19, 2, &[2, 1]),
    (19, 3, &[4, 1, 0]),
    (19, 4, &[10, 2, 0, 0]),
    (19, 5, &[9, 1, 0, 0, 0]),
    (23, 2, &[7, 1]),
    (23, 3, &[3, 1, 0]),
    (23, 4, &[11, 1, 0, 0]),
    (23, 5, &[3, 1, 0, 0, 0]),
    (29, 2, &[3, 1]),
    (29, 3, &[11, 1, 0]),
    (29, 4, &[19, 1, 0, 0]),
    (31, 2, &[12, 1]),
    (31, 3, &[14, 1, 0]),
    (31, 4, &[17, 2, 0, 0]),
    (37, 2, &[5, 1]),
    (37, 3, &[13, 1, 0]),
    (37, 4, &[2, 1, 0, 0]),
    (41, 2, &[12, 1]),
    (41, 3, &[6, 1, 0]),
    (41, 4, &[17, 1, 0, 0]),
    (43, 2, &[3, 1]),
    (43, 3, &[14, 1, 0]),
    (43, 4, &[20, 1, 0, 0]),
    (47, 2, &[13, 1]),
    (47, 3, &[4, 1, 0]),
    (47, 4, &[39, 1, 0, 0]),
    (53, 2, &[5, 1]),
    (53, 3, &[5, 1, 0]),
    (53, 4, &[18, 1, 0, 0]),
    (59, 2, &[2, 1]),
    (59, 3, &[3, 1, 0]),
    (59, 4, &[14, 1, 0, 0]),
    (61, 2, &[2, 1]),
    (61, 3, &[17, 1, 0]),
    (61, 4, &[2, 1, 0, 0]),
    (67, 2, &[12, 1]),
    (67, 3, &[6, 1, 0]),
    (71, 2, &[11, 1]),
    (71, 3, &[8, 1, 0]),
    (73, 2, &[11, 1]),
    (73, 3, &[13, 1, 0]),
    (79, 2, &[3, 1]),
    (79, 3, &[9, 1, 0]),
    (83, 2, &[2, 1]),
    (83, 3, &[7, 1, 0]),
    (89, 2, &[6, 1]),
    (89, 3, &[19, 1, 0]),
    (97, 2, &[5, 1]),
    (97, 3, &[7, 1, 0]),
    (101, 2, &[3, 1]),
    (101, 3, &[3, 1, 0]),
    (103, 2, &[5, 1]),
    (103, 3, &[4, 1, 0]),
    (107, 2, &[5, 1]),
    (107, 3, &[9, 1, 0]),
    (109, 2, &[6, 1]),
    (109, 3, &[6, 1, 0]),
    (113, 2, &[10, 1]),
    (113, 3, &[5, 1, 0]),
    (127, 2, &[3, 1]),
    (127, 3, &[15, 1, 0]),
    (131, 2, &[14, 1]),
    (131, 3, &[3, 1, 0]),
    (137, 2, &[6, 1]),
    (137, 3, &[6, 1, 0]),
    (139, 2, &[2, 1]),
    (139, 3, &[7, 1, 0]),
    (149, 2, &[3, 1]),
    (149, 3, &[14, 1, 0]),
    (151, 2, &[12, 1]),
    (151, 3, &[5, 1, 0]),
    (157, 2, &[6, 1]),
    (157, 3, &[5, 1, 0]),
    (163, 2, &[11, 1]),
    (163, 3, &[4, 1, 0]),
    (167, 2, &[5, 1]),
    (167, 3, &[3, 1, 0]),
    (173, 2, &[5, 1]),
    (173, 3, &[5, 1, 0]),
    (179, 2, &[7, 1]),
    (179, 3, &[4, 1, 0]),
    (181, 2, &[18, 1]),
    (181, 3, &[18, 1, 0]),
    (191, 2, &[19, 1]),
    (191, 3, &[3, 1, 0]),
    (193, 2, &[5, 1]),
    (193, 3, &[5, 1, 0]),
    (197, 2, &[3, 1]),
    (197, 3, &[8, 1, 0]),
    (199, 2, &[6, 1]),
    (199, 3, &[13, 1, 0]),
    (211, 2, &[3, 1]),
    (211, 3, &[24, 1, 0]),
    (223, 2, &[5, 1]),
    (223, 3, &[9, 1, 0]),
    (227, 2, &[5, 1]),
    (227, 3, &[9, 1, 0]),
    (229, 2, &[6, 1]),
    (229, 3, &[6, 1, 0]),
    (233, 2, &[3, 1]),
    (233, 3, &[3, 1, 0]),
    (239, 2, &[13, 1]),
    (239, 3, &[11, 1, 0]),
    (241, 2, &[13, 1]),
    (241, 3, &[7, 1, 0]),
    (251, 2, &[19, 1]),
    (251, 3, &[7, 1, 0]),
    (257, 2, &[5, 1]),
    (263, 2, &[7, 1]),
    (269, 2, &[2, 1]),
    (271, 2, &[21, 1]),
    (277, 2, &[11, 1]),
    (281, 2, &[3, 1]),
    (283, 2, &[3, 1]),
    (293, 2, &[2, 1]),
    (307, 2, &[5, 1]),
    (311, 2, &[17, 1]),
    (313, 2, &[14, 1]),
    (317, 2, &[5, 1]),
    (331, 2, &[11, 1]),
    (337, 2, &[15, 1]),
    (347, 2, &[7, 1]),
    (349, 2, &[2, 1]),
    (353, 2, &[13, 1]),
    (359, 2, &[7, 1]),
    (367, 2, &[6, 1]),
    (373, 2, &[6, 1]),
    (379, 2, &[10, 1]),
    (383, 2, &[5, 1]),
    (389, 2, &[8, 1]),
    (397, 2, &[13, 1]),
    (401, 2, &[17, 1]),
    (409, 2, &[22, 1]),
    (419, 2, &[2, 1]),
    (421, 2, &[18, 1]),
    (431, 2, &[7, 1]),
    (433, 2, &[5, 1]),
    (439, 2, &[23, 1]),
    (443, 2, &[7, 1]),
    (449, 2, &[12, 1]),
    (457, 2, &[15, 1]),
    (461, 2, &[2, 1]),
    (463, 2, &[11, 1]),
    (467, 2, &[6, 1]),
    (479, 2, &[34, 1]),
    (487, 2, &[10, 1]),
    (491, 2, &[8, 1]),
    (499, 2, &[10, 1]),
    (503, 2, &[19, 1]),
    (509, 2, &[2, 1]),
    (521, 2, &[6, 1]),
    (523, 2, &[2, 1]),
    (541, 2, &[10, 1]),
    (547, 2, &[5, 1]),
    (557, 2, &[8, 1]),
    (563, 2, &[5, 1]),
    (569, 2, &[3, 1]),
    (571, 2, &[3, 1]),
    (577, 2, &[10, 1]),
    (587, 2, &[8, 1]),
    (593, 2, &[3, 1]),
    (599, 2, &[7, 1]),
    (601, 2, &[11, 1]),
    (607, 2, &[3, 1]),
    (613, 2, &[6, 1]),
    (617, 2, &[26, 1]),
    (619, 2, &[2, 1]),
    (631, 2, &[12, 1]),
    (641, 2, &[6, 1]),
    (643, 2, &[13, 1]),
    (647, 2, &[10, 1]),
    (653, 2, &[14, 1]),
    (659, 2, &[10, 1]),
    (661, 2, &[2, 1]),
    (673, 2, &[5, 1]),
    (677, 2, &[3, 1]),
    (683, 2, &[5, 1]),
    (691, 2, &[12, 1]),
    (701, 2, &[3, 1]),
    (709, 2, &[10, 1]),
    (719, 2, &[19, 1]),
    (727, 2, &[31, 1]),
    (733, 2, &[6, 1]),
    (739, 2, &[22, 1]),
    (743, 2, &[5, 1]),
    (751, 2, &[12, 1]),
    (757, 2, &[6, 1]),
    (761, 2, &[7, 1]),
    (769, 2, &[21, 1]),
    (773, 2, &[2, 1]),
    (787, 2, &[2, 1]),
    (797, 2, &[8, 1]),
    (809, 2, &[12, 1]),
    (811, 2, &[10, 1]),
    (821, 2, &[3, 1]),
    (823, 2, &[14, 1]),
    (827, 2, &[6, 1]),
    (829, 2, &[2, 1]),
    (839, 2, &[11, 1]),
    (853, 2, &[2, 1]),
    (857, 2, &[5, 1]),
    (859, 2, &[2, 1]),
    (863, 2, &[5, 1]),
    (877, 2, &[5, 1]),
    (881, 2, &[15, 1]),
    (883, 2, &[28, 1]),
    (887, 2, &[10, 1]),
    (907, 2, &[5, 1]),
    (911, 2, &[37, 1]),
    (919, 2, &[15, 1]),
    (929, 2, &[7, 1]),
    (937, 2, &[11, 1]),
    (941, 2, &[2, 1]),
    (947, 2, &[19, 1]),
    (953, 2, &[5, 1]),
    (967, 2, &[28, 1]),
    (971, 2, &[6, 1]),
    (977, 2, &[6, 1]),
    (983, 2, &[11, 1]),
    (991, 2, &[11, 1]),
    (997, 2, &[11, 1]),
    (1009, 2, &[11, 1]),
    (1013, 2, &[7, 1]),
    (1019, 2, &[6, 1]),
    (1021, 2, &[10, 1]),
    (1031, 2, &[21, 1]),
    (1033, 2, &[10, 1]),
    (1039, 2, &[11, 1]),
    (1049, 2, &[12, 1]),
    (1051, 2, &[10, 1]),
    (1061, 2, &[15, 1]),
    (1063, 2, &[3, 1]),
    (1069, 2, &[26, 1]),
    (1087, 2, &[10, 1]),
    (1091, 2, &[2, 1]),
    (1093, 2, &[5, 1]),
    (1097, 2, &[3, 1]),
    (1103, 2, &[7, 1]),
    (1109, 2, &[2, 1]),
    (1117, 2, &[17, 1]),
    (1123, 2, &[2, 1]),
    (1129, 2, &[13, 1]),
    (1151, 2, &[51, 1]),
    (1153, 2, &[5, 1]),
    (1163, 2, &[23, 1]),
    (1171, 2, &[12, 1]),
    (1181, 2, &[7, 1]),
    (1187, 2, &[6, 1]),
    (1193, 2, &[6, 1]),
    (1201, 2, &[22, 1]),
    (1213, 2, &[6, 1]),
    (1217, 2, &[6, 1]),
    (1223, 2, &[15, 1]),
    (1229, 2, &[14, 1]),
    (1231, 2, &[23, 1]),
    (1237, 2, &[2, 1]),
    (1249, 2, &[11, 1]),
    (1259, 2, &[2, 1]),
    (1277, 2, &[2, 1]),
    (1279, 2, &[6, 1]),
    (1283, 2, &[5, 1]),
    (1289, 2, &[11, 1]),
    (1291, 2, &[2, 1]),
    (1297, 2, &[15, 1]),
    (1301, 2, &[10, 1]),
    (1303, 2, &[6, 1]),
    (1307, 2, &[2, 1]),
    (1319, 2, &[17, 1]),
    (1321, 2, &[13, 1]),
    (1327, 2, &[3, 1]),
    (1361, 2, &[7, 1]),
    (1367, 2, &[7, 1]),
    (1373, 2, &[12, 1]),
    (1381, 2, &[11, 1]),
    (1399, 2, &[15, 1]),
    (1409, 2, &[12, 1]),
    (1423, 2, &[6, 1]),
    (1427, 2, &[2, 1]),
    (1429, 2, &[33, 1]),
    (1433, 2, &[5, 1]),
    (1439, 2, &[7, 1]),
    (1447, 2, &[3, 1]),
    (1451, 2, &[7, 1]),
    (1453, 2, &[14, 1]),
    (1459, 2, &[3, 1]),
    (1471, 2, &[6, 1]),
    (1481, 2, &[3, 1]),
    (1483, 2, &[2, 1]),
    (1487, 2, &[13, 1]),
    (1489, 2, &[26, 1]),
    (1493, 2, &[3, 1]),
    (1499, 2, &[11, 1]),
    (1511, 2, &[41, 1]),
    (1523, 2, &[5, 1]),
    (1531, 2, &[2, 1]),
    (1543, 2, &[12, 1]),
    (1549, 2, &[10, 1]),
    (1553, 2, &[3, 1]),
    (1559, 2, &[19, 1]),
    (1567, 2, &[10, 1]),
    (1571, 2, &[2, 1]),
    (1579, 2, &[3, 1]),
    (1583, 2, &[19, 1]),
    (1597, 2, &[34, 1]),
    (1601, 2, &[3, 1]),
    (1607, 2, &[7, 1]),
    (1609, 2, &[21, 1]),
    (1613, 2, &[7, 1]),
    (1619, 2, &[7, 1]),
    (1621, 2, &[6, 1]),
    (1627, 2, &[12, 1]),
    (1637, 2, &[5, 1]),
    (1657, 2, &[21, 1]),
    (1663, 2, &[3, 1]),
    (1667, 2, &[5, 1]),
    (1669, 2, &[13, 1]),
    (1693, 2, &[2, 1]),
    (1697, 2, &[7, 1]),
    (1699, 2, &[15, 1]),
    (1709, 2, &[23, 1]),
    (1721, 2, &[35, 1]),
    (1723, 2, &[3, 1]),
    (1733, 2, &[3, 1]),
    (1741, 2, &[2, 1]),
    (1747, 2, &[5, 1]),
    (1753, 2, &[14, 1]),
    (1759, 2, &[28, 1]),
    (1777, 2, &[20, 1]),
    (1783, 2, &[10, 1]),
    (1787, 2, &[7, 1]),
    (1789, 2, &[10, 1]),
    (1801, 2, &[31, 1]),
    (1811, 2, &[10, 1]),
    (1823, 2, &[5, 1]),
    (1831, 2, &[6, 1]),
    (1847, 2, &[10, 1]),
    (1861, 2, &[2, 1]),
    (1867, 2, &[2, 1]),
    (1871, 2, &[19, 1]),
    (1873, 2, &[15, 1]),
    (1877, 2, &[11, 1]),
    (1879, 2, &[11, 1]),
    (1889, 2, &[14, 1]),
    (1901, 2, &[15, 1]),
    (1907, 2, &[2, 1]),
    (1913, 2, &[5, 1]),
    (1931, 2, &[14, 1]),
    (1933, 2, &[5, 1]),
    (1949, 2, &[2, 1]),
    (1951, 2, &[24, 1]),
    (1973, 2, &[2, 1]),
    (1979, 2, &[10, 1]),
    (1987, 2, &[2, 1]),
    (1993, 2, &[22, 1]),
    (1997, 2, &[8, 1]),
    (1999, 2, &[3, 1]),
    (2003, 2, &[5, 1]),
    (2011, 2, &[11, 1]),
    (2017, 2, &[5, 1]),
    (2027, 2, &[7, 1]),
    (2029, 2, &[2, 1]),
    (2039, 2, &[19, 1]),
    (2053, 2, &[20, 1]),
    (2063, 2, &[10, 1]),
    (2069, 2, &[8, 1]),
    (2081, 2, &[3, 1]),
    (2083, 2, &[5, 1]),
    (2087, 2, &[13, 1]),
    (2089, 2, &[14, 1]),
    (2099, 2, &[8, 1]),
    (2111, 2, &[7, 1]),
    (2113, 2, &[10, 1]),
    (2129, 2, &[11, 1]),
    (2131, 2, &[2, 1]),
    (2137, 2, &[10, 1]),
    (2141, 2, &[2, 1]),
    (2143, 2, &[5, 1]),
    (2153, 2, &[11, 1]),
    (2161, 2, &[23, 1]),
    (2179, 2, &[10, 1]),
    (2203, 2, &[5, 1]),
    (2207, 2, &[7, 1]),
    (2213, 2, &[8, 1]),
    (2221, 2, &[10, 1]),
    (2237, 2, &[5, 1]),
    (2239, 2, &[12, 1]),
    (2243, 2, &[18, 1]),
    (2251, 2, &[10, 1]),
    (2267, 2, &[2, 1]),
    (2269, 2, &[6, 1]),
    (2273, 2, &[5, 1]),
    (2281, 2, &[56, 1]),
    (2287, 2, &[21, 1]),
    (2293, 2, &[5, 1]),
    (2297, 2, &[6, 1]),
    (2309, 2, &[8, 1]),
    (2311, 2, &[11, 1]),
    (2333, 2, &[5, 1]),
    (2339, 2, &[17, 1]),
    (2341, 2, &[50, 1]),
    (2347, 2, &[5, 1]),
    (2351, 2, &[29, 1]),
    (2357, 2, &[7, 1]),
    (2371, 2, &[2, 1]),
    (2377, 2, &[5, 1]),
    (2381, 2, &[12, 1]),
    (2383, 2, &[5, 1]),
    (2389, 2, &[6, 1]),
    (2393, 2, &[3, 1]),
    (2399, 2, &[11, 1]),
    (2411, 2, &[6, 1]),
    (2417, 2, &[10, 1]),
    (2423, 2, &[14, 1]),
    (2437, 2, &[6, 1]),
    (2441, 2, &[11, 1]),
    (2447, 2, &[5, 1]),
    (2459, 2, &[6, 1]),
    (2467, 2, &[2, 1]),
    (2473, 2, &[5, 1]),
    (2477, 2, &[2, 1]),
    (2503, 2, &[3, 1]),
    (2521, 2, &[17, 1]),
    (2531, 2, &[7, 1]),
    (2539, 2, &[2, 1]),
    (2543, 2, &[7, 1]),
    (2549, 2, &[10, 1]),
    (2551, 2, &[30, 1]),
    (2557, 2, &[17, 1]),
    (2579, 2, &[18, 1]),
    (2591, 2, &[21, 1]),
    (2593, 2, &[10, 1]),
    (2609, 2, &[6, 1]),
    (2617, 2, &[30, 1]),
    (2621, 2, &[2, 1]),
    (2633, 2, &[6, 1]),
    (2647, 2, &[3, 1]),
    (2657, 2, &[11, 1]),
    (2659, 2, &[2, 1]),
    (2663, 2, &[17, 1]),
    (2671, 2, &[23, 1]),
    (2677, 2, &[2, 1]),
    (2683, 2, &[3, 1]),
    (2687, 2, &[5, 1]),
    (2689, 2, &[51, 1]),
    (2693, 2, &[7, 1]),
    (2699, 2, &[7, 1]),
    (2707, 2, &[2, 1]),
    (2711, 2, &[7, 1]),
    (2713, 2, &[5, 1]),
    (2719, 2, &[3, 1]),
    (2729, 2, &[28, 1]),
    (2731, 2, &[11, 1]),
    (2741, 2, &[8, 1]),
    (2749, 2, &[13, 1]),
    (2753, 2, &[10, 1]),
    (2767, 2, &[3, 1]),
    (2777, 2, &[5, 1]),
    (2789, 2, &[3, 1]),
    (2791, 2, &[15, 1]),
    (2797, 2, &[6, 1]),
    (2801, 2, &[3, 1]),
    (2803, 2, &[2, 1]),
    (2819, 2, &[39, 1]),
    (2833, 2, &[20, 1]),
    (2837, 2, &[11, 1]),
    (2843, 2, &[6, 1]),
    (2851, 2, &[18, 1]),
    (2857, 2, &[11, 1]),
    (2861, 2, &[10, 1]),
    (2879, 2, &[7, 1]),
    (2887, 2, &[31, 1]),
    (2897, 2, &[12, 1]),
    (2903, 2, &[5, 1]),
    (2909, 2, &[15, 1]),
    (2917, 2, &[5, 1]),
    (2927, 2, &[11, 1]),
    (2939, 2, &[2, 1]),
    (2953, 2, &[13, 1]),
    (2957, 2, &[2, 1]),
    (2963, 2, &[5, 1]),
    (2969, 2, &[3, 1]),
    (2971, 2, &[10, 1]),
    (2999, 2, &[19, 1]),
    (3001, 2, &[29, 1]),
    (3011, 2, &[6, 1]),
    (3019, 2, &[12, 1]),
    (3023, 2, &[17, 1]),
    (3037, 2, &[2, 1]),
    (3041, 2, &[6, 1]),
    (3049, 2, &[11, 1]),
    (3061, 2, &[24, 1]),
    (3067, 2, &[5, 1]),
    (3079, 2, &[6, 1]),
    (3083, 2, &[11, 1]),
    (3089, 2, &[21, 1]),
    (3109, 2, &[18, 1]),
    (3119, 2, &[7, 1]),
    (3121, 2, &[56, 1]),
    (3137, 2, &[10, 1]),
    (3163, 2, &[3, 1]),
    (3167, 2, &[20, 1]),
    (3169, 2, &[17, 1]),
    (3181, 2, &[11, 1]),
    (3187, 2, &[5, 1]),
    (3191, 2, &[17, 1]),
    (3203, 2, &[7, 1]),
    (3209, 2, &[7, 1]),
    (3217, 2, &[15, 1]),
    (3221, 2, &[19, 1]),
    (3229, 2, &[33, 1]),
    (3251, 2, &[10, 1]),
    (3253, 2, &[2, 1]),
    (3257, 2, &[6, 1]),
    (3259, 2, &[17, 1]),
    (3271, 2, &[6, 1]),
    (3299, 2, &[6, 1]),
    (3301, 2, &[17, 1]),
    (3307, 2, &[2, 1]),
    (3313, 2, &[10, 1]),
    (3319, 2, &[12, 1]),
    (3323, 2, &[6, 1]),
    (3329, 2, &[3, 1]),
    (3331, 2, &[12, 1]),
    (3343, 2, &[5, 1]),
    (3347, 2, &[5, 1]),
    (3359, 2, &[22, 1]),
    (3361, 2, &[22, 1]),
    (3371, 2, &[7, 1]),
    (3373, 2, &[5, 1]),
    (3389, 2, &[10, 1]),
    (3391, 2, &[6, 1]),
    (3407, 2, &[15, 1]),
    (3413, 2, &[8, 1]),
    (3433, 2, &[5, 1]),
    (3449, 2, &[3, 1]),
    (3457, 2, &[14, 1]),
    (3461, 2, &[2, 1]),
    (3463, 2, &[10, 1]),
    (3467, 2, &[6, 1]),
    (3469, 2, &[6, 1]),
    (3491, 2, &[2, 1]),
    (3499, 2, &[2, 1]),
    (3511, 2, &[12, 1]),
    (3517, 2, &[2, 1]),
    (3527, 2, &[5, 1]),
    (3529, 2, &[26, 1]),
    (3533, 2, &[2, 1]),
    (3539, 2, &[6, 1]),
    (3541, 2, &[18, 1]),
    (3547, 2, &[2, 1]),
    (3557, 2, &[8, 1]),
    (3559, 2, &[3, 1]),
    (3571, 2, &[3, 1]),
    (3581, 2, &[3, 1]),
    (3583, 2, &[3, 1]),
    (3593, 2, &[5, 1]),
    (3607, 2, &[13, 1]),
    (3613, 2, &[5, 1]),
    (3617, 2, &[7, 1]),
    (3623, 2, &[7, 1]),
    (3631, 2, &[15, 1]),
    (3637, 2, &[15, 1]),
    (3643, 2, &[2, 1]),
    (3659, 2, &[2, 1]),
    (3671, 2, &[19, 1]),
    (3673, 2, &[10, 1]),
    (3677, 2, &[14, 1]),
    (3691, 2, &[29, 1]),
    (3697, 2, &[20, 1]),
    (3701, 2, &[7, 1]),
    (3709, 2, &[2, 1]),
    (3719, 2, &[21, 1]),
    (3727, 2, &[11, 1]),
    (3733, 2, &[6, 1]),
    (3739, 2, &[18, 1]),
    (3761, 2, &[3, 1]),
    (3767, 2, &[10, 1]),
    (3769, 2, &[11, 1]),
    (3779, 2, &[6, 1]),
    (3793, 2, &[28, 1]),
    (3797, 2, &[2, 1]),
    (3803, 2, &[5, 1]),
    (3821, 2, &[10, 1]),
    (3823, 2, &[3, 1]),
    (3833, 2, &[5, 1]),
    (3847, 2, &[17, 1]),
    (3851, 2, &[18, 1]),
    (3853, 2, &[2, 1]),
    (3863, 2, &[20, 1]),
    (3877, 2, &[2, 1]),
    (3881, 2, &[34, 1]),
    (3889, 2, &[11, 1]),
    (3907, 2, &[5, 1]),
    (3911, 2, &[31, 1]),
    (3917, 2, &[5, 1]),
    (3919, 2, &[21, 1]),
    (3923, 2, &[2, 1]),
    (3929, 2, &[3, 1]),
    (3931, 2, &[12, 1]),
    (3943, 2, &[5, 1]),
    (3947, 2, &[2, 1]),
    (3967, 2, &[6, 1]),
    (3989, 2, &[2, 1]),
    (4001, 2, &[3, 1]),
    (4003, 2, &[2, 1]),
    (4007, 2, &[10, 1]),
    (4013, 2, &[26, 1]),
    (4019, 2, &[6, 1]),
    (4021, 2, &[2, 1]),
    (4027, 2, &[5, 1]),
    (4049, 2, &[7, 1]),
    (4051, 2, &[10, 1]),
    (4057, 2, &[5, 1]),
    (4073, 2, &[10, 1]),
    (4079, 2, &[23, 1]),
    (4091, 2, &[2, 1]),
    (4093, 2, &[2, 1]),
];
