# path graph P4 with a diagonal colour; not coherent
4
0 1 2 2
1 0 1 2
2 1 0 1
2 2 1 0
