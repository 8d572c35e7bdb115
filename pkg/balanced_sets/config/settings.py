"""Configuration settings for Balanced Sets.

Every limit below is a keyword default somewhere in the library and can be
overridden per call or from the command line.
"""

# Vectors are packed into a single machine word
MAX_WIDTH = 64

# Largest subspace dimension ``Subspace.enumerate`` will materialise
ENUMERATION_GUARD = 24

# Largest rank swept by the coset method (2**r linear systems), ``--max-rank``
RANK_GUARD = 24

# Largest width accepted by the spectrum path (2**n integers), ``--max-spectrum-n``
SPECTRUM_GUARD = 24

# Largest width accepted by the brute-force oracle
ORACLE_GUARD = 20

# ``--enumerate`` only lists B(S) when it has at most this many members
ENUMERATE_MEMBERS_LIMIT = 2**20

# Total multiplicity of a multiset must fit a signed 64-bit accumulator
MULTIPLICITY_GUARD = 2**62

# Entries of the sign table built per vectorised block (8 bytes each)
SWEEP_CHUNK = 2**22

# Largest n for which the full Hadamard sign matrix is built
HADAMARD_GUARD = 12

# Folder for CSV exports.
# This directory will be created automatically if it does not exist.
OUTPUT_DIR = "output"

# Optional log file; ``None`` keeps logging on stderr only
LOG_FILE = None
