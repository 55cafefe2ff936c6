"""Graph representation, edge subsets, partitions and file formats"""
