"""Branch-and-bound search for edge decompositions"""
