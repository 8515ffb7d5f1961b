"""Borel Jump: Borel classes of omega-regular languages under alphabet expansion.

Classifies deterministic omega-automata into the Borel hierarchy below the
third level, embeds them into larger alphabets, predicts and checks the class
jump, and solves the games used to illustrate it.
"""

__version__ = "1.0.0"
