import os
import sys

# Development builds leave the extension in the CMake build tree; put it on
# sys.path so `import adsig` finds it through the package fallback.
core_dir = os.environ.get("ADSIG_CORE_DIR")
if core_dir and core_dir not in sys.path:
    sys.path.insert(0, core_dir)
