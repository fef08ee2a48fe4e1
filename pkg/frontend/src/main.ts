import { App } from "./app.js";
import { CurfitApi } from "./api.js";

const root = document.getElementById("app");
if (root) {
  new App(root, new CurfitApi(""));
}
