"""Polynomial-time decomposition algorithms"""
