# -*- coding: utf-8 -*-

__author__ = """Necklace developers"""
__email__ = 'necklace-dev@example.org'
__version__ = '0.1.0'
