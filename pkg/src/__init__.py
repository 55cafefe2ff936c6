"""Edge decomposition toolkit: regular, locally regular and locally irregular parts"""
