#!/usr/bin/env node
import { mainSweeps } from "../src/cli.js";

process.exit(mainSweeps(process.argv.slice(2)));
