"""Monotone SAT variants and their graph reductions"""
