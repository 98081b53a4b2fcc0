# makes the config tree part of the source distribution
