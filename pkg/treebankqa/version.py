# version scheme for version: (major, minor, micro, release_level)
#
# major:
#   0 .. not all planned features done
#   1 .. all features available
#
# minor:
#   changes with new features or minor API changes
#
# micro:
#   changes with bug fixes
#
# release_level:
#   a .. alpha, b .. beta, rc .. release candidate, release: public release
#
# examples
#
# pre release alpha 2: __version__ = "0.9a2"; version = (0, 9, 0, 'a2')
# bug fix release: __version__ = "1.0.1"; version = (1, 0, 1, 'release')

version = (1, 0, 0, 'release')
__version__ = "1.0.0"
