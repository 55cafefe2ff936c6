"""Part validity predicates"""
