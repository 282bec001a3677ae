"""
sekwl - substructure-enhanced K-hop Weisfeiler-Lehman refinement toolkit
"""

__version__ = "0.1.0"
__author__ = "sekwl developers"
__description__ = "Random-walk substructure encodings, the K-hop WL refinement family and an experiment harness"
