#!/usr/bin/env node
import { mainDistribution } from "../src/cli.js";

process.exit(mainDistribution(process.argv.slice(2)));
