"""
Version and authorship information
"""

__author__    = 'Revtori Developers'
__copyright__ = 'Copyright 2026 Revtori Developers. All rights reserved.'
__license__   = 'GNU Affero General Public License 3 (AGPL-3)'
__version__   = '0.3.1'
__date__      = '2026.10.19'
