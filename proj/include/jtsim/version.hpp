#pragma once

#define JTSIM_VERSION "0.1.0"
