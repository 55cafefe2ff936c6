"""Constructors for extremal graphs and reduction gadgets"""
