import logging
import sys

from config.Config import LOG_LEVEL

LOG = logging.getLogger("bisite")
# stderr keeps stdout free for JSON reports
logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
LOG.setLevel(LOG_LEVEL)
