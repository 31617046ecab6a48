import { SessionApi } from "./api.js";
import { ExplorerApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const server = params.get("server") ?? "http://127.0.0.1:8435";
const builder = params.get("builder") ?? "hive:6";

const root = document.getElementById("app");
if (root) {
  const app = new ExplorerApp(root, new SessionApi(server));
  app.start(builder).catch(err => {
    root.textContent = `cannot reach session service at ${server}: ${err}`;
  });
}
